//! Actions of `L_k` on tree levels and on spider-web vertices.
//!
//! On the tree, `c̄_r · x_1 x_2 … = (x_1 + r)(x_2 + x_1)(x_3 + x_2) …` and
//! `c · x = (x_1 + 1) x_2 …`, all mod `k`. Symbol `n` of the image depends
//! only on symbols `≤ n`, so the action on length-`N` prefixes is exact.

use super::{Generator, LampElement, Letter};

fn cbar_forward(r: u32, x: &[u32], k: u32) -> Vec<u32> {
    let mut y = Vec::with_capacity(x.len());
    for (i, &xi) in x.iter().enumerate() {
        let add = if i == 0 { r } else { x[i - 1] };
        y.push((xi + add) % k);
    }
    y
}

fn cbar_backward(r: u32, y: &[u32], k: u32) -> Vec<u32> {
    let mut x: Vec<u32> = Vec::with_capacity(y.len());
    for (i, &yi) in y.iter().enumerate() {
        let sub = if i == 0 { r } else { x[i - 1] };
        x.push((yi + k - sub % k) % k);
    }
    x
}

fn add_first(x: &mut [u32], v: i64, k: u32) {
    if let Some(x0) = x.first_mut() {
        *x0 = ((*x0 as i64 + v).rem_euclid(k as i64)) as u32;
    }
}

fn b_power_level(n: i64, x: Vec<u32>, k: u32) -> Vec<u32> {
    (0..n.unsigned_abs()).fold(x, |x, _| {
        if n > 0 {
            cbar_forward(0, &x, k)
        } else {
            cbar_backward(0, &x, k)
        }
    })
}

/// Action of a single letter on a level-`N` word.
pub fn act_letter_level(letter: Letter, x: &[u32], k: u32) -> Vec<u32> {
    match (letter.generator, letter.inverse) {
        (Generator::B, false) => cbar_forward(0, x, k),
        (Generator::B, true) => cbar_backward(0, x, k),
        (Generator::CBar(r), false) => cbar_forward(r, x, k),
        (Generator::CBar(r), true) => cbar_backward(r, x, k),
        (Generator::C, inv) => {
            let mut y = x.to_vec();
            add_first(&mut y, if inv { -1 } else { 1 }, k);
            y
        }
    }
}

/// Action of a group element on a level-`N` word, via the decomposition
/// `g = ∏ b^p c^{v_p} b^{-p} · b^s` applied right to left.
pub fn act_level(g: &LampElement, x: &[u32]) -> Vec<u32> {
    let k = g.k();
    let mut y = b_power_level(g.shift(), x.to_vec(), k);
    for (&p, &v) in g.lamps() {
        y = b_power_level(-p, y, k);
        add_first(&mut y, v as i64, k);
        y = b_power_level(p, y, k);
    }
    y
}

/// Action on spider-web vertices `(x, j)` with `j` mod `M`:
/// `b · (x, j) = (x_N x_1 … x_{N-1}, j - 1)` and
/// `c · (x, j) = ((x_1 - 1) x_2 … x_N, j)`.
pub fn sw_action(g: &LampElement, x: &[u32], j: usize, m: usize) -> (Vec<u32>, usize) {
    let k = g.k() as i64;
    let n = x.len();
    let s = g.shift();
    let slice = (j as i64 - s).rem_euclid(m as i64) as usize;
    if n == 0 {
        return (Vec::new(), slice);
    }
    let nn = n as i64;
    // b^s rotates right by s places.
    let mut y: Vec<u32> = (0..nn).map(|i| x[(i - s).rem_euclid(nn) as usize]).collect();
    // b^p c^v b^{-p} lowers the symbol at position p mod N by v.
    for (&p, &v) in g.lamps() {
        let i = p.rem_euclid(nn) as usize;
        y[i] = (y[i] as i64 - v as i64).rem_euclid(k) as u32;
    }
    (y, slice)
}
