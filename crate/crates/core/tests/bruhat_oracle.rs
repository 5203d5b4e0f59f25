//! Independent cross-validation of the Bruhat order: the descent recursion
//! against the subword characterization on a fixed reduced word.

use std::collections::BTreeSet;
use zorbit_core::perm::Perm;
use zorbit_core::weyl::{
    bruhat_leq, enumerate_weyl, simple_reflections, type_length, WeylKind,
};

/// A reduced word for w, harvested by greedy right descents.
fn reduced_word(w: &Perm, kind: WeylKind) -> Vec<usize> {
    let gens = simple_reflections(kind);
    let mut cur = w.clone();
    let mut word = Vec::new();
    while !cur.is_identity() {
        let inv = cur.inversions();
        let (idx, next) = gens
            .iter()
            .enumerate()
            .map(|(i, s)| (i, cur.compose(s)))
            .find(|(_, c)| c.inversions() < inv)
            .expect("descent exists");
        word.push(idx);
        cur = next;
    }
    // the word read left to right multiplies back to w
    word.reverse();
    word
}

/// Everything below w in Bruhat order: products of subwords of one fixed
/// reduced word (the subword property).
fn lower_interval(w: &Perm, kind: WeylKind) -> BTreeSet<Perm> {
    let gens = simple_reflections(kind);
    let word = reduced_word(w, kind);
    let d = kind.degree();
    // check the harvested word really is reduced and lands on w
    let mut prod = Perm::identity(d);
    for &i in &word {
        prod = prod.compose(&gens[i]);
    }
    assert_eq!(&prod, w);
    assert_eq!(word.len(), type_length(w, kind).unwrap());

    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << word.len()) {
        let mut prod = Perm::identity(d);
        for (pos, &i) in word.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                prod = prod.compose(&gens[i]);
            }
        }
        out.insert(prod);
    }
    out
}

#[test]
fn descent_recursion_matches_subword_property() {
    for kind in [
        WeylKind::Sym(4),
        WeylKind::Signed { eps: 1, d: 5 },
        WeylKind::Signed { eps: 1, d: 6 },
        WeylKind::Signed { eps: -1, d: 4 },
        WeylKind::Signed { eps: -1, d: 6 },
    ] {
        let all = enumerate_weyl(kind);
        for w in &all {
            if type_length(w, kind).unwrap() > 9 {
                continue; // keep the subword enumeration small
            }
            let below = lower_interval(w, kind);
            for u in &all {
                assert_eq!(
                    bruhat_leq(u, w, kind).unwrap(),
                    below.contains(u),
                    "{kind:?}: u={u} w={w}"
                );
            }
        }
    }
}
