use ctopo_core::finite_oracle::{
    check_theorem, enumerate_ideals, enumerate_topologies, search_counterexample, BfTable, BfValue, FiniteIdeal,
    FiniteIdealSpace, Operator, CLAIMS, THEOREMS,
};
use ctopo_core::{IdealTopology, Topology};

/// Counts families of subsets of an `n`-set that satisfy the topology axioms,
/// by trying every family that contains ∅ and X.
fn brute_topology_count(n: usize) -> usize {
    let x = (1u32 << n) - 1;
    let middle: Vec<u32> = (1..x).collect();
    (0u64..(1 << middle.len()))
        .filter(|pick| {
            let mut fam = vec![0, x];
            fam.extend(middle.iter().enumerate().filter(|(k, _)| pick & (1 << k) != 0).map(|(_, &s)| s));
            fam.iter().all(|a| fam.iter().all(|b| fam.contains(&(a | b)) && fam.contains(&(a & b))))
        })
        .count()
}

fn brute_ideal_count(n: usize) -> usize {
    let subsets = 1u32 << n;
    (0u64..(1 << subsets))
        .filter(|fam| {
            let has = |s: u32| fam & (1 << s) != 0;
            has(0)
                && (0..subsets)
                    .all(|a| !has(a) || (0..subsets).all(|b| (b & !a != 0 || has(b)) && (!has(b) || has(a | b))))
        })
        .count()
}

#[test]
fn enumeration_matches_brute_force_counts() {
    for n in 1..=4 {
        assert_eq!(enumerate_topologies(n).unwrap().len(), brute_topology_count(n), "n={n}");
    }
    for n in 1..=3 {
        assert_eq!(enumerate_ideals(n).unwrap().len(), brute_ideal_count(n), "n={n}");
    }
    assert_eq!(enumerate_topologies(5).unwrap().len(), 6942);
}

#[test]
fn enumeration_is_sound_and_distinct() {
    for n in 1..=4 {
        let spaces = enumerate_topologies(n).unwrap();
        let mut fams: Vec<u64> = spaces.iter().map(|s| s.family()).collect();
        fams.dedup();
        assert_eq!(fams.len(), spaces.len());
        for sp in &spaces {
            for &a in sp.opens() {
                for &b in sp.opens() {
                    assert!(sp.is_open_set(a | b) && sp.is_open_set(a & b));
                }
            }
        }
    }
}

/// Generic formulas over neighbourhoods against definitional enumeration,
/// for every model on up to three points.
#[test]
fn generic_formulas_agree_with_enumeration() {
    for n in 1..=3 {
        for sp in enumerate_topologies(n).unwrap() {
            for id in enumerate_ideals(n).unwrap() {
                let t = BfTable::build(&sp, &id);
                let g = FiniteIdealSpace::new(sp.clone(), id).unwrap();
                assert_eq!(g.is_ideal_compact(), ctopo_core::finite_oracle::is_ideal_compact(&t));
                for s in 0..=t.x {
                    let generic = [
                        g.interior(&s),
                        g.closure(&s),
                        g.derived(&s),
                        g.frontier(&s),
                        g.border(&s),
                        g.exterior(&s),
                        g.ideal_interior(&s),
                        g.ideal_closure(&s),
                        g.ideal_derived(&s),
                        g.ideal_border(&s),
                        g.ideal_frontier(&s),
                        g.ideal_exterior(&s),
                    ];
                    for (op, v) in Operator::ALL.iter().zip(generic) {
                        assert_eq!(t.eval(*op, s), BfValue::Set(v), "{op} of {s} in {:?} / {:?}", sp, id);
                    }
                    assert_eq!(t.eval(Operator::IsIopen, s), BfValue::Flag(g.is_ideal_open(&s)));
                    assert_eq!(t.eval(Operator::IsIclosed, s), BfValue::Flag(g.is_ideal_closed(&s)));
                }
            }
        }
    }
}

#[test]
fn full_ideal_degenerates_to_classical() {
    for n in 1..=3 {
        for sp in enumerate_topologies(n).unwrap() {
            let t = BfTable::build(&sp, &FiniteIdeal::principal(n, (1 << n) - 1).unwrap());
            for s in 0..=t.x {
                assert_eq!((t.int_i(s), t.cl_i(s), t.d_i(s)), (t.int(s), t.cl(s), t.d(s)));
            }
        }
    }
}

#[test]
fn every_theorem_holds_up_to_three_points() {
    for th in THEOREMS {
        let report = check_theorem(th.id, 3).unwrap();
        assert!(report.passed, "{} failed: {:?}", th.id, report.counterexamples.first());
        assert!(report.instances_checked > 0);
    }
}

#[test]
fn every_refutable_claim_has_a_small_witness() {
    for c in CLAIMS {
        let w = search_counterexample(c.statement.id, 3).unwrap();
        assert_eq!(w.is_some(), c.refutable, "{}", c.statement.id);
    }
}

#[test]
fn spec_theorem_examples() {
    for id in ["thm-int-cl-duality", "thm-union", "thm-int-v"] {
        assert!(check_theorem(id, 3).unwrap().passed);
    }
}
