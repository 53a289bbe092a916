//! Integer Smith normal form, used to compute abelianizations of finitely
//! presented groups.

/// `Z^n / R` where `R` is spanned by the given integer row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    generators: usize,
    /// Nonzero diagonal entries `d_0 | d_1 | ...` of the normal form.
    diag: Vec<i64>,
    /// Column transform `V` with `U A V = D`.
    v: Vec<Vec<i64>>,
}

impl Abelianization {
    pub fn from_relators(generators: usize, rows: &[Vec<i64>]) -> Self {
        let mut a: Vec<Vec<i64>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
        for r in &a {
            assert_eq!(r.len(), generators, "relator vector has wrong length");
        }
        let mut v: Vec<Vec<i64>> =
            (0..generators).map(|i| (0..generators).map(|j| i64::from(i == j)).collect()).collect();
        let m = a.len();
        let n = generators;
        let mut diag = Vec::new();
        let mut t = 0;
        while t < m.min(n) {
            // pivot: smallest nonzero absolute value in the lower-right block
            let Some((pi, pj)) = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| (a[i][j].abs(), i, j))
            else {
                break;
            };
            a.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut v, t, pj);
            loop {
                let p = a[t][t];
                let mut dirty = false;
                for i in (t + 1)..m {
                    let q = a[i][t] / p;
                    if q != 0 {
                        for j in t..n {
                            a[i][j] -= q * a[t][j];
                        }
                    }
                    dirty |= a[i][t] != 0;
                }
                for j in (t + 1)..n {
                    let q = a[t][j] / p;
                    if q != 0 {
                        for i in t..m {
                            a[i][j] -= q * a[i][t];
                        }
                        for row in v.iter_mut() {
                            row[j] -= q * row[t];
                        }
                    }
                    dirty |= a[t][j] != 0;
                }
                if !dirty {
                    // divisibility of the remaining block
                    let bad = ((t + 1)..m).find(|&i| ((t + 1)..n).any(|j| a[i][j] % p != 0));
                    match bad {
                        Some(i) => {
                            for j in t..n {
                                a[t][j] += a[i][j];
                            }
                            continue;
                        }
                        None => break,
                    }
                }
                // move the smallest remaining entry of row/column t to the pivot
                let (bi, bj) = std::iter::once((t, t))
                    .chain(((t + 1)..m).map(|i| (i, t)))
                    .chain(((t + 1)..n).map(|j| (t, j)))
                    .filter(|&(i, j)| a[i][j] != 0)
                    .min_by_key(|&(i, j)| a[i][j].abs())
                    .expect("pivot is nonzero");
                a.swap(t, bi);
                swap_cols(&mut a, t, bj);
                swap_cols(&mut v, t, bj);
            }
            if a[t][t] < 0 {
                for i in t..m {
                    a[i][t] = -a[i][t];
                }
                for row in v.iter_mut() {
                    row[t] = -row[t];
                }
            }
            diag.push(a[t][t]);
            t += 1;
        }
        Abelianization { generators, diag, v }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn free_rank(&self) -> usize {
        self.generators - self.diag.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<i64> {
        self.diag.iter().copied().filter(|&d| d > 1).collect()
    }

    /// Coordinates of the class of `x` in `⊕ Z/d_i ⊕ Z^r`.
    pub fn coordinates(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.generators);
        let mut out: Vec<i64> = (0..self.generators)
            .map(|j| (0..self.generators).map(|i| x[i] * self.v[i][j]).sum())
            .collect();
        for (i, &d) in self.diag.iter().enumerate() {
            out[i] = out[i].rem_euclid(d);
        }
        out
    }

    pub fn is_zero(&self, x: &[i64]) -> bool {
        self.coordinates(x).iter().all(|&c| c == 0)
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank() == 0 && self.torsion().is_empty()
    }

    /// E.g. `Z`, `Z^2 x Z/2`, `0`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank() {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion().iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" x ")
        }
    }
}

fn swap_cols(a: &mut [Vec<i64>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}
