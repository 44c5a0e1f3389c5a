//! Finite groups by multiplication table and their group algebras.

use serde::{Deserialize, Serialize};

use super::table::{AlgebraTable, Generator, TableParts};
use super::AlgebraError;
use crate::linalg::Field;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub name: String,
    /// `mult[a][b]` = index of `a·b`.
    pub mult: Vec<Vec<usize>>,
    pub element_names: Vec<String>,
    /// Distinguished generating elements with names; the group algebra uses
    /// `g − 1` for each.
    pub generators: Vec<(String, usize)>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> Option<usize> {
        (0..self.order()).find(|&e| (0..self.order()).all(|a| self.mult[e][a] == a && self.mult[a][e] == a))
    }

    pub fn validate(&self) -> Result<usize, AlgebraError> {
        let n = self.order();
        let bad = |m: &str| Err(AlgebraError::NotAGroup(format!("{}: {m}", self.name)));
        if n == 0 {
            return bad("empty table");
        }
        if self.element_names.len() != n || self.mult.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("table is not square over its elements");
        }
        let Some(e) = self.identity() else { return bad("no identity") };
        for a in 0..n {
            if !(0..n).any(|b| self.mult[a][b] == e && self.mult[b][a] == e) {
                return bad(&format!("element {} has no inverse", self.element_names[a]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]] {
                        return bad("not associative");
                    }
                }
            }
        }
        if self.generators.iter().any(|&(_, g)| g >= n) {
            return bad("generator out of range");
        }
        Ok(e)
    }

    pub fn cyclic(n: usize) -> GroupTable {
        GroupTable {
            name: format!("C{n}"),
            mult: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            element_names: (0..n).map(|i| format!("g^{i}")).collect(),
            generators: if n > 1 { vec![("x".into(), 1)] } else { vec![] },
        }
    }

    /// Direct product; element `(a, b)` has index `a * |H| + b`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
        let (n, m) = (g.order(), h.order());
        let mult =
            (0..n * m).map(|x| (0..n * m).map(|y| g.mult[x / m][y / m] * m + h.mult[x % m][y % m]).collect()).collect();
        let names = (0..n * m).map(|x| format!("({},{})", g.element_names[x / m], h.element_names[x % m])).collect();
        let ge = g.identity().unwrap_or(0);
        let he = h.identity().unwrap_or(0);
        let mut generators: Vec<(String, usize)> = g.generators.iter().map(|(s, a)| (s.clone(), a * m + he)).collect();
        generators.extend(h.generators.iter().map(|(s, b)| (s.clone(), ge * m + b)));
        GroupTable { name: format!("{}x{}", g.name, h.name), mult, element_names: names, generators }
    }

    /// `(C_p)^r` with generators named `x, y, z, w, …`.
    pub fn elementary_abelian(p: usize, r: usize) -> GroupTable {
        const NAMES: [&str; 6] = ["x", "y", "z", "w", "u", "v"];
        let mut g = GroupTable::cyclic(1);
        g.generators.clear();
        for i in 0..r {
            let mut c = GroupTable::cyclic(p);
            c.generators = vec![(NAMES.get(i).map_or_else(|| format!("x{i}"), |s| s.to_string()), 1)];
            g = GroupTable::direct_product(&g, &c);
        }
        g.name = format!("C{p}^{r}");
        g
    }

    /// Dihedral group of order `2n`, elements `r^i s^j` at index `i + n j`,
    /// generated by the reflections `s` (named x) and `s·r` (named y).
    pub fn dihedral(n: usize) -> GroupTable {
        let idx = |i: usize, j: usize| i % n + n * j;
        let mut mult = vec![vec![0; 2 * n]; 2 * n];
        for a in 0..2 * n {
            for b in 0..2 * n {
                let (i1, j1) = (a % n, a / n);
                let (i2, j2) = (b % n, b / n);
                // r^i1 s^j1 r^i2 s^j2 = r^(i1 ± i2) s^(j1+j2)
                let i = if j1 == 0 { i1 + i2 } else { i1 + n - i2 };
                mult[a][b] = idx(i, (j1 + j2) % 2);
            }
        }
        let names = (0..2 * n).map(|a| format!("r^{}s^{}", a % n, a / n)).collect();
        let s = idx(0, 1);
        let sr = mult[s][idx(1, 0)];
        GroupTable {
            name: format!("D{}", 2 * n),
            mult,
            element_names: names,
            generators: vec![("x".into(), s), ("y".into(), sr)],
        }
    }
}

/// Group algebra `k[G]` on the basis of group elements. The distinguished
/// generators are `g − 1` for the chosen group generators.
pub fn group_algebra(g: &GroupTable, field: &Field) -> Result<AlgebraTable, AlgebraError> {
    let e = g.validate()?;
    let n = g.order();
    let f = field;
    let mut structure = vec![f.zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            structure[(a * n + b) * n + g.mult[a][b]] = f.one();
        }
    }
    let mut unit = vec![f.zero(); n];
    unit[e] = f.one();
    let generators = g
        .generators
        .iter()
        .map(|(name, el)| {
            let mut v = vec![f.zero(); n];
            v[*el] = f.one();
            v[e] = f.sub(v[e], f.one());
            Generator { name: name.clone(), element: v }
        })
        .collect();
    AlgebraTable::from_parts(TableParts {
        name: format!("{}[{}]", f.spec(), g.name),
        field: f.clone(),
        labels: g.element_names.clone(),
        structure,
        unit,
        generators,
        relations: Vec::new(),
        group_algebra: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraClass;

    #[test]
    fn c2_over_f2_is_dual_numbers() {
        let a = group_algebra(&GroupTable::cyclic(2), &Field::prime(2).unwrap()).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.class(), AlgebraClass::PGroup);
        let x = &a.generators()[0].element;
        assert!(a.mul(x, x).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn sizes_and_radicals() {
        let a = group_algebra(&GroupTable::elementary_abelian(3, 2), &Field::prime(3).unwrap()).unwrap();
        assert_eq!(a.dim(), 9);
        let d8 = group_algebra(&GroupTable::dihedral(4), &Field::prime(2).unwrap()).unwrap();
        assert_eq!(d8.dim(), 8);
        assert_eq!(d8.radical().unwrap().dim(), 7);
        let k4 = group_algebra(&GroupTable::elementary_abelian(2, 2), &Field::prime(2).unwrap()).unwrap();
        assert_eq!(k4.radical().unwrap().dim(), 3);
    }

    #[test]
    fn non_p_group_is_unsupported() {
        let a = group_algebra(&GroupTable::cyclic(3), &Field::prime(2).unwrap()).unwrap();
        assert_eq!(a.class(), AlgebraClass::Unsupported);
        assert!(a.radical().is_err());
    }

    #[test]
    fn rejects_non_group() {
        let mut g = GroupTable::cyclic(3);
        g.mult[1][1] = 1;
        assert!(matches!(group_algebra(&g, &Field::prime(3).unwrap()), Err(AlgebraError::NotAGroup(_))));
    }
}
