//! Two-column standard tableaux and their dictionary into corrected Weyl
//! elements, with the dimension bookkeeping.
//!
//! A tableau is stored by its second-column entries p_1 < ... < p_r alone;
//! the first column is the complement, written in decreasing order. Validity
//! means each row decreases from left to right.

use crate::error::{Error, Result};
use crate::perm::Perm;
use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TwoColTableau {
    pub n: usize,
    /// Second-column entries, bottom-to-top: strictly increasing.
    pub p: Vec<usize>,
}

impl TwoColTableau {
    pub fn new(n: usize, p: Vec<usize>) -> Result<TwoColTableau> {
        let r = p.len();
        if 2 * r > n {
            return Err(Error::InvalidModel(format!("r={r} exceeds floor({n}/2)")));
        }
        for w in p.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::PreconditionViolated(
                    "second column must strictly increase".into(),
                ));
            }
        }
        if p.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::PreconditionViolated("entries out of range".into()));
        }
        let t = TwoColTableau { n, p };
        if !t.rows_decrease() {
            return Err(Error::PreconditionViolated(
                "row-decrease condition fails".into(),
            ));
        }
        Ok(t)
    }

    /// First column, decreasing top-to-bottom: the complement of p.
    pub fn first_column(&self) -> Vec<usize> {
        let mut c: Vec<usize> = (1..=self.n).filter(|x| !self.p.contains(x)).collect();
        c.reverse();
        c
    }

    /// The j-th largest element of the complement must exceed p_{r-j+1}.
    fn rows_decrease(&self) -> bool {
        let c = self.first_column();
        let r = self.p.len();
        (0..r).all(|j| c[j] > self.p[r - 1 - j])
    }

    /// Separation: consecutive second-column entries differ by more than
    /// one. Reported as a flag, never enforced; the dictionary still applies
    /// without it.
    pub fn separated(&self) -> bool {
        self.p.windows(2).all(|w| w[1] > w[0] + 1)
    }

    /// Text rendering of the two-column diagram.
    pub fn render(&self) -> String {
        let c = self.first_column();
        let r = self.p.len();
        let mut out = String::new();
        for (i, &ci) in c.iter().enumerate() {
            if i < r {
                out.push_str(&format!("{:>3} {:>3}\n", ci, self.p[r - 1 - i]));
            } else {
                out.push_str(&format!("{:>3}\n", ci));
            }
        }
        out
    }
}

/// The gap sequence q, the single-column letters s, and the Weyl element the
/// tableau encodes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TableauWord {
    pub q: Vec<usize>,
    pub s: Vec<usize>,
    #[serde(serialize_with = "crate::tableaux::serialize_perm")]
    pub w: Perm,
}

pub(crate) fn serialize_perm<S: serde::Serializer>(
    p: &Perm,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&p.to_string())
}

/// All valid second columns for (n, r), lexicographic.
pub fn enumerate_tableaux(n: usize, r: usize) -> Vec<TwoColTableau> {
    fn rec(n: usize, r: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<TwoColTableau>) {
        if acc.len() == r {
            if let Ok(t) = TwoColTableau::new(n, acc.clone()) {
                out.push(t);
            }
            return;
        }
        for x in start..=n {
            acc.push(x);
            rec(n, r, x + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, 1, &mut Vec::new(), &mut out);
    out
}

/// The dictionary tableau -> Weyl element: q_r = p_r + 1, each earlier q_i is
/// the least available letter above p_i, s is the increasing complement, and
/// w sends p_i -> i, q_i -> n-r+i, s_j -> n-r+1-j.
pub fn tableau_to_w(t: &TwoColTableau) -> TableauWord {
    let n = t.n;
    let r = t.p.len();
    let mut q = vec![0usize; r];
    let mut taken: Vec<usize> = Vec::new();
    for i in (0..r).rev() {
        let pi = t.p[i];
        let qi = (pi + 1..=n)
            .find(|x| !taken.contains(x) && !t.p.contains(x))
            .expect("gap letter exists for a valid tableau");
        q[i] = qi;
        taken.push(qi);
    }
    let s: Vec<usize> = (1..=n)
        .filter(|x| !t.p.contains(x) && !q.contains(x))
        .collect();
    let mut images = vec![0usize; n];
    for (i, &pi) in t.p.iter().enumerate() {
        images[pi - 1] = i + 1;
    }
    for (i, &qi) in q.iter().enumerate() {
        images[qi - 1] = n - r + i + 1;
    }
    for (j, &sj) in s.iter().enumerate() {
        images[sj - 1] = n - r - j;
    }
    let w = Perm::from_images(images).expect("tableau letters partition 1..n");
    TableauWord { q, s, w }
}

/// (dim H/B_H, length of w) = (r choose 2, n-r choose 2).
pub fn tableau_dims(t: &TwoColTableau) -> (usize, usize) {
    let r = t.p.len();
    let choose2 = |m: usize| m * m.saturating_sub(1) / 2;
    (choose2(r), choose2(t.n - r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::hook_component_count;
    use crate::resolve::check_conditions;
    use crate::weyl::{Family, ModelSpec};

    #[test]
    fn golden_examples() {
        // example a)
        let t = TwoColTableau::new(5, vec![2, 4]).unwrap();
        let word = tableau_to_w(&t);
        assert_eq!(word.w, "3 1 4 2 5".parse().unwrap());
        assert_eq!(word.q, vec![3, 5]);
        assert_eq!(word.s, vec![1]);
        assert_eq!(tableau_dims(&t), (1, 3));
        assert_eq!(word.w.inversions(), 3);
        assert!(t.separated());

        // example b)
        let t = TwoColTableau::new(6, vec![2, 4]).unwrap();
        let word = tableau_to_w(&t);
        assert_eq!(word.w, "4 1 5 2 6 3".parse().unwrap());
        assert_eq!(tableau_dims(&t), (1, 6));
        assert_eq!(word.w.inversions(), 6);

        // example c): three-row second column
        let t = TwoColTableau::new(7, vec![2, 4, 5]).unwrap();
        let word = tableau_to_w(&t);
        assert_eq!(word.w, "4 1 5 2 3 7 6".parse().unwrap());
        assert!(!t.separated());
    }

    #[test]
    fn counts_match_hooks() {
        for n in 1..=10usize {
            for r in 0..=n / 2 {
                assert_eq!(
                    enumerate_tableaux(n, r).len() as u128,
                    hook_component_count(n, r),
                    "tableau count at n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn words_have_expected_lengths_and_conditions() {
        for n in 1..=9usize {
            for r in 0..=n / 2 {
                let spec = ModelSpec::new(Family::A, n, r).unwrap();
                let mut seen = Vec::new();
                for t in enumerate_tableaux(n, r) {
                    let word = tableau_to_w(&t);
                    let (_, len) = tableau_dims(&t);
                    assert_eq!(word.w.inversions(), len, "length at n={n} r={r} {t:?}");
                    let (a, b) = check_conditions(&word.w, &spec).unwrap();
                    assert!(a && b, "conditions fail at n={n} r={r} {t:?}");
                    seen.push(word.w);
                }
                let total = seen.len();
                seen.sort();
                seen.dedup();
                assert_eq!(seen.len(), total, "duplicate words at n={n} r={r}");
            }
        }
    }

    #[test]
    fn degenerate_r0() {
        let ts = enumerate_tableaux(6, 0);
        assert_eq!(ts.len(), 1);
        let word = tableau_to_w(&ts[0]);
        assert_eq!(tableau_dims(&ts[0]), (0, 15));
        assert_eq!(word.w.inversions(), 15);
    }

    #[test]
    fn invalid_tableaux_rejected() {
        // p = (1, 2) on n = 4: the second largest complement element 3 must
        // exceed p_1 = 1, fine, but the largest must exceed p_2 = 2 -- also
        // fine; p = (3, 4) fails since complement (2, 1) is dominated
        assert!(TwoColTableau::new(4, vec![3, 4]).is_err());
        assert!(TwoColTableau::new(4, vec![2, 2]).is_err());
        assert!(TwoColTableau::new(4, vec![0]).is_err());
        assert!(TwoColTableau::new(4, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn render_shows_rows() {
        let t = TwoColTableau::new(5, vec![2, 4]).unwrap();
        let s = t.render();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].contains('5') && lines[0].contains('4'));
        assert!(lines[2].trim() == "1");
    }
}
