use super::{Diagram, Flavor, ObjectSignature};

/// Bell numbers (number of set partitions of an `n`-set).
pub fn bell(n: usize) -> u64 {
    // Bell triangle.
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// `(n-1)!!` style count of perfect matchings on `n` points (0 if `n` odd).
pub fn double_factorial(n: usize) -> u64 {
    if n % 2 == 1 {
        return 0;
    }
    (1..n as u64).step_by(2).product()
}

/// All set partitions of `0..n` as restricted growth strings, in
/// lexicographic order.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let limit = if cur.is_empty() { 0 } else { max + 1 };
        for v in 0..=limit {
            cur.push(v);
            rec(cur, max.max(v), n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

fn perfect_matchings(n: usize) -> Vec<Vec<usize>> {
    fn rec(labels: &mut Vec<usize>, next: usize, out: &mut Vec<Vec<usize>>) {
        let Some(first) = labels.iter().position(|&l| l == usize::MAX) else {
            out.push(labels.clone());
            return;
        };
        labels[first] = next;
        for j in first + 1..labels.len() {
            if labels[j] == usize::MAX {
                labels[j] = next;
                rec(labels, next + 1, out);
                labels[j] = usize::MAX;
            }
        }
        labels[first] = usize::MAX;
    }
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        rec(&mut vec![usize::MAX; n], 0, &mut out);
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Complete diagram basis of `Hom(src, tgt)`, sorted by canonical labels.
/// Empty when the Hom space is zero (odd point count for O, unbalanced
/// colors for GL) or the flavors differ.
pub fn enumerate_basis(src: ObjectSignature, tgt: ObjectSignature) -> Vec<Diagram> {
    if src.flavor != tgt.flavor {
        return Vec::new();
    }
    let n = src.points() + tgt.points();
    let mut out: Vec<Diagram> = match src.flavor {
        Flavor::S => set_partitions(n).into_iter().map(|l| Diagram::from_raw(src, tgt, l)).collect(),
        Flavor::O => perfect_matchings(n).into_iter().map(|l| Diagram::from_raw(src, tgt, l)).collect(),
        Flavor::GL => {
            if src.black + tgt.white != tgt.black + src.white {
                return Vec::new();
            }
            let sp = src.points();
            // "Positive" ends: source blacks and target whites; "negative"
            // ends: target blacks and source whites. A walled diagram is a
            // bijection between the two.
            let pos: Vec<usize> = (0..src.black).chain(sp + tgt.black..sp + tgt.points()).collect();
            let neg: Vec<usize> = (sp..sp + tgt.black).chain(src.black..sp).collect();
            permutations(pos.len())
                .into_iter()
                .map(|perm| {
                    let mut raw = vec![0usize; n];
                    for (k, &p) in pos.iter().enumerate() {
                        raw[p] = k;
                        raw[neg[perm[k]]] = k;
                    }
                    Diagram::from_raw(src, tgt, raw)
                })
                .collect()
        }
    };
    out.sort();
    out
}
