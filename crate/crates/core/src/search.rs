//! Backtracking search for group-valued assignments subject to product
//! constraints `x[a] x[b] = x[c]` and inverse constraints `x[a] = x[b]⁻¹`.

use crate::error::{Error, Result};
use crate::groups::{Elem, FiniteGroup};

#[derive(Clone, Copy, Debug)]
enum Constraint {
    Product([usize; 3]),
    Inverse([usize; 2]),
}

pub struct Solver<'g> {
    group: &'g FiniteGroup,
    nvars: usize,
    constraints: Vec<Constraint>,
    fixed: Vec<Option<Elem>>,
    watch: Vec<Vec<usize>>,
}

enum Step {
    Ok,
    Conflict,
}

impl<'g> Solver<'g> {
    pub fn new(group: &'g FiniteGroup, nvars: usize) -> Self {
        Solver { group, nvars, constraints: Vec::new(), fixed: vec![None; nvars], watch: vec![Vec::new(); nvars] }
    }

    /// `x[a] x[b] = x[c]`
    pub fn product(&mut self, a: usize, b: usize, c: usize) {
        let id = self.constraints.len();
        self.constraints.push(Constraint::Product([a, b, c]));
        for v in [a, b, c] {
            if !self.watch[v].contains(&id) {
                self.watch[v].push(id);
            }
        }
    }

    /// `x[a] = x[b]⁻¹`
    pub fn inverse(&mut self, a: usize, b: usize) {
        let id = self.constraints.len();
        self.constraints.push(Constraint::Inverse([a, b]));
        self.watch[a].push(id);
        if b != a {
            self.watch[b].push(id);
        }
    }

    pub fn fix(&mut self, a: usize, g: Elem) {
        self.fixed[a] = Some(g);
    }

    /// Calls `visit` on every solution in lexicographic order of the
    /// variables until it returns `false`. Returns the number of solutions
    /// visited. Fails when more than `limit` branching nodes are needed.
    pub fn solve(&self, limit: u64, mut visit: impl FnMut(&[Elem]) -> bool) -> Result<u64> {
        let mut values: Vec<Option<Elem>> = vec![None; self.nvars];
        let mut trail: Vec<usize> = Vec::new();
        let mut nodes = 0u64;
        let mut found = 0u64;
        let mut stop = false;
        let mut ok = true;
        for v in 0..self.nvars {
            if let Some(g) = self.fixed[v] {
                if !self.assign(&mut values, &mut trail, v, g) {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            self.dfs(&mut values, &mut trail, &mut nodes, limit, &mut found, &mut stop, &mut visit)?;
        }
        Ok(found)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        values: &mut Vec<Option<Elem>>,
        trail: &mut Vec<usize>,
        nodes: &mut u64,
        limit: u64,
        found: &mut u64,
        stop: &mut bool,
        visit: &mut dyn FnMut(&[Elem]) -> bool,
    ) -> Result<()> {
        let Some(v) = values.iter().position(Option::is_none) else {
            *found += 1;
            let full: Vec<Elem> = values.iter().map(|x| x.expect("complete")).collect();
            if !visit(&full) {
                *stop = true;
            }
            return Ok(());
        };
        for g in self.group.elements() {
            *nodes += 1;
            if *nodes > limit {
                return Err(Error::SearchLimitExceeded(format!("more than {limit} search nodes")));
            }
            let mark = trail.len();
            if self.assign(values, trail, v, g) {
                self.dfs(values, trail, nodes, limit, found, stop, visit)?;
            }
            while trail.len() > mark {
                let u = trail.pop().expect("trail above mark");
                values[u] = None;
            }
            if *stop {
                break;
            }
        }
        Ok(())
    }

    /// Assigns and propagates; returns false on conflict. Assignments are
    /// recorded on the trail either way.
    fn assign(&self, values: &mut [Option<Elem>], trail: &mut Vec<usize>, v: usize, g: Elem) -> bool {
        let mut queue = vec![(v, g)];
        while let Some((v, g)) = queue.pop() {
            match values[v] {
                Some(h) if h == g => continue,
                Some(_) => return false,
                None => {
                    values[v] = Some(g);
                    trail.push(v);
                }
            }
            for &ci in &self.watch[v] {
                if let Step::Conflict = self.propagate(values, self.constraints[ci], &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    fn propagate(&self, values: &[Option<Elem>], c: Constraint, queue: &mut Vec<(usize, Elem)>) -> Step {
        let g = self.group;
        match c {
            Constraint::Inverse([a, b]) => match (values[a], values[b]) {
                (Some(x), Some(y)) => {
                    if x != g.inv(y) {
                        return Step::Conflict;
                    }
                }
                (Some(x), None) => queue.push((b, g.inv(x))),
                (None, Some(y)) => queue.push((a, g.inv(y))),
                (None, None) => {}
            },
            Constraint::Product([a, b, c]) => match (values[a], values[b], values[c]) {
                (Some(x), Some(y), Some(z)) => {
                    if g.mul(x, y) != z {
                        return Step::Conflict;
                    }
                }
                (None, Some(y), Some(z)) if a != b && a != c => queue.push((a, g.mul(z, g.inv(y)))),
                (Some(x), None, Some(z)) if b != a && b != c => queue.push((b, g.mul(g.inv(x), z))),
                (Some(x), Some(y), None) if c != a && c != b => queue.push((c, g.mul(x, y))),
                // x[a] x[b] = x[a] forces x[b] = e, and symmetrically
                (None, _, None) if a == c && b != a => queue.push((b, Elem::E)),
                (_, None, None) if b == c && a != b => queue.push((a, Elem::E)),
                _ => {}
            },
        }
        Step::Ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_solutions_of_small_systems() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let mut s = Solver::new(&z3, 3);
        s.product(0, 1, 2);
        assert_eq!(s.solve(1000, |_| true).unwrap(), 9);
        s.inverse(0, 1);
        let mut sols = Vec::new();
        s.solve(1000, |v| {
            sols.push(v.to_vec());
            true
        })
        .unwrap();
        assert_eq!(sols.len(), 3);
        assert!(sols.iter().all(|v| v[2] == Elem::E));
        let mut t = Solver::new(&z3, 2);
        t.product(0, 1, 0);
        assert_eq!(t.solve(1000, |_| true).unwrap(), 3);
        assert!(t.solve(1, |_| true).is_err());
    }

    #[test]
    fn conflicting_fixes_have_no_solutions() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let mut s = Solver::new(&z2, 2);
        s.inverse(0, 1);
        s.fix(0, Elem::E);
        s.fix(1, z2.elem("1").unwrap());
        assert_eq!(s.solve(100, |_| true).unwrap(), 0);
    }
}
