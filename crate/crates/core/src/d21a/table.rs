//! Structure constants of D(2,1;alpha) in the three-sl(2) model.
//!
//! Even part: three copies of sl(2) with bases (h_m, e_m, f_m). Odd part:
//! V (x) V (x) V for the defining module V = <x, y>. The odd-odd bracket is
//! `[v, w] = sum_m sigma_m psi(v_k, w_k) psi(v_l, w_l) p(v_m, w_m)_m` where
//! {k, l} are the other two slots, psi is the symplectic form with
//! psi(x, y) = 1 and p is the symmetric map V x V -> sl(2) with
//! p(x, x) = 2e, p(y, y) = -2f, p(x, y) = -h.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{D21Params, Q};
use crate::rootdata::Parity;

/// One basis element of the 17-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    pub label: String,
    /// Creation/annihilation name (`a1+`, `b-1-`, ...) for the eight
    /// elements of grades +-1.
    pub cao: Option<String>,
    pub parity: Parity,
    /// Weight as coefficients of (e1, e2, e3).
    pub weight: [i32; 3],
    /// Grade in the length-3 grading: (w1 + w2) / 2.
    pub grade: i32,
}

/// Exact bracket table: `brackets[i * n + j]` lists the nonzero
/// coefficients of `[b_i, b_j]` as (index, value).
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTable {
    pub params: D21Params,
    pub basis: Vec<BasisElement>,
    pub(super) brackets: Vec<Vec<(usize, Q)>>,
    /// Scale applied to each model basis vector during normalization.
    pub normalization: Vec<Q>,
}

pub const DIM: usize = 17;
pub const CARTAN: [usize; 3] = [0, 1, 2];

/// Index of `e_m` (m = 0, 1, 2).
pub fn e_index(m: usize) -> usize {
    3 + 2 * m
}

/// Index of `f_m`.
pub fn f_index(m: usize) -> usize {
    4 + 2 * m
}

/// Index of the odd vector with slot signs `s` (+1 for x, -1 for y).
pub fn odd_index(s: [i32; 3]) -> usize {
    let bit = |x: i32| usize::from(x < 0);
    9 + 4 * bit(s[0]) + 2 * bit(s[1]) + bit(s[2])
}

fn odd_signs(i: usize) -> [i32; 3] {
    let k = i - 9;
    let sign = |b: usize| if b == 0 { 1 } else { -1 };
    [sign((k >> 2) & 1), sign((k >> 1) & 1), sign(k & 1)]
}

pub fn parity_of(i: usize) -> Parity {
    if i >= 9 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

fn weight_of(i: usize) -> [i32; 3] {
    let mut w = [0; 3];
    match i {
        0..=2 => {}
        3..=8 => {
            let m = (i - 3) / 2;
            w[m] = if (i - 3).is_multiple_of(2) { 2 } else { -2 };
        }
        _ => w = odd_signs(i),
    }
    w
}

pub(super) fn format_weight(w: [i32; 3]) -> String {
    let mut s = String::new();
    for (k, &c) in w.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("e{}", k + 1));
    }
    s
}

fn basis() -> Vec<BasisElement> {
    (0..DIM)
        .map(|i| {
            let weight = weight_of(i);
            BasisElement {
                label: if i < 3 {
                    format!("h{}", i + 1)
                } else {
                    format!("x({})", format_weight(weight))
                },
                cao: None,
                parity: parity_of(i),
                grade: (weight[0] + weight[1]) / 2,
                weight,
            }
        })
        .collect()
}

type Sparse = Vec<(usize, Q)>;

fn push(v: &mut Sparse, k: usize, c: Q) {
    if c.is_zero() {
        return;
    }
    match v.iter_mut().find(|(j, _)| *j == k) {
        Some((_, x)) => *x += c,
        None => v.push((k, c)),
    }
    v.retain(|(_, x)| !x.is_zero());
}

fn int(x: i64) -> Q {
    Q::from_integer(x.into())
}

/// [a, b] inside copy `m` of sl(2); `a`, `b` in {0: h, 1: e, 2: f}.
fn sl2(m: usize, a: usize, b: usize) -> Sparse {
    let idx = |t: usize| match t {
        0 => CARTAN[m],
        1 => e_index(m),
        _ => f_index(m),
    };
    let (t, c) = match (a, b) {
        (0, 1) => (1, 2),
        (1, 0) => (1, -2),
        (0, 2) => (2, -2),
        (2, 0) => (2, 2),
        (1, 2) => (0, 1),
        (2, 1) => (0, -1),
        _ => return Vec::new(),
    };
    vec![(idx(t), int(c))]
}

/// Action of sl(2) element `t` on slot value `s` (+1 = x, -1 = y).
fn act(t: usize, s: i32) -> Option<(i32, i64)> {
    match (t, s) {
        (0, s) => Some((s, s as i64)),
        (1, -1) => Some((1, 1)),
        (2, 1) => Some((-1, 1)),
        _ => None,
    }
}

fn psi(a: i32, b: i32) -> i64 {
    match (a, b) {
        (1, -1) => 1,
        (-1, 1) => -1,
        _ => 0,
    }
}

/// p(a, b) as (element type, coefficient).
fn p(a: i32, b: i32) -> (usize, i64) {
    match (a, b) {
        (1, 1) => (1, 2),
        (-1, -1) => (2, -2),
        _ => (0, -1),
    }
}

fn even_slot(i: usize) -> (usize, usize) {
    if i < 3 {
        (i, 0)
    } else {
        ((i - 3) / 2, if (i - 3).is_multiple_of(2) { 1 } else { 2 })
    }
}

fn model_bracket(params: &D21Params, i: usize, j: usize) -> Sparse {
    let mut out = Vec::new();
    match (i >= 9, j >= 9) {
        (false, false) => {
            let ((mi, ti), (mj, tj)) = (even_slot(i), even_slot(j));
            if mi == mj {
                out = sl2(mi, ti, tj);
            }
        }
        (false, true) | (true, false) => {
            let (ev, od, sign) = if i < 9 { (i, j, 1) } else { (j, i, -1) };
            let (m, t) = even_slot(ev);
            let mut s = odd_signs(od);
            if let Some((s2, c)) = act(t, s[m]) {
                s[m] = s2;
                push(&mut out, odd_index(s), int(sign * c));
            }
        }
        (true, true) => {
            let (a, b) = (odd_signs(i), odd_signs(j));
            for m in 0..3 {
                let (k, l) = ((m + 1) % 3, (m + 2) % 3);
                let pre = psi(a[k], b[k]) * psi(a[l], b[l]);
                if pre == 0 {
                    continue;
                }
                let (t, c) = p(a[m], b[m]);
                let target = match t {
                    0 => CARTAN[m],
                    1 => e_index(m),
                    _ => f_index(m),
                };
                push(&mut out, target, params.sigma[m].clone() * int(pre * c));
            }
        }
    }
    out.sort_by_key(|(k, _)| *k);
    out
}

impl StructureTable {
    /// The unnormalized model.
    pub(super) fn model(params: &D21Params) -> StructureTable {
        let brackets = (0..DIM)
            .flat_map(|i| (0..DIM).map(move |j| (i, j)))
            .map(|(i, j)| model_bracket(params, i, j))
            .collect();
        StructureTable {
            params: params.clone(),
            basis: basis(),
            brackets,
            normalization: vec![Q::one(); DIM],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    /// Nonzero coefficients of `[b_i, b_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.brackets[i * self.dim() + j]
    }

    pub fn unit(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    /// Bilinear extension of the bracket to coefficient vectors.
    pub fn bracket(&self, u: &[Q], w: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in w.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.structure(i, j) {
                    out[k.to_owned()] += &ab * c;
                }
            }
        }
        out
    }

    /// `[b_i, v]` for a basis element and a vector.
    pub fn bracket_unit(&self, i: usize, w: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (j, b) in w.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, c) in self.structure(i, j) {
                out[*k] += b * c;
            }
        }
        out
    }

    /// Rescales basis vectors: b_i -> lambda_i b_i, so that
    /// c'_ij^k = lambda_i lambda_j c_ij^k / lambda_k.
    pub(super) fn rescale(&mut self, lambda: &[Q]) {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.brackets[i * n + j].iter_mut() {
                    *c = c.clone() * &lambda[i] * &lambda[j] / &lambda[*k];
                }
            }
        }
        for (s, l) in self.normalization.iter_mut().zip(lambda) {
            *s *= l;
        }
    }

    /// Replaces one coefficient (used for negative controls).
    pub fn perturb(&mut self, i: usize, j: usize, k: usize, delta: Q) {
        let n = self.dim();
        push(&mut self.brackets[i * n + j], k, delta);
        self.brackets[i * n + j].sort_by_key(|(k, _)| *k);
    }
}
