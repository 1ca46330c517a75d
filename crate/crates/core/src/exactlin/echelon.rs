//! Row-echelon bases with the leading (largest) word as pivot.

use std::collections::{BTreeMap, HashMap};

use super::field::Field;

pub(crate) type Row<F> = Vec<(u64, F)>;

/// Subtracts `c * row` from a sparse accumulator.
fn sub_row<F: Field>(acc: &mut BTreeMap<u64, F>, c: &F, row: &[(u64, F)]) {
    for (w, a) in row {
        let e = acc.entry(*w).or_insert_with(F::zero);
        e.sub_mul_assign(c, a);
        if e.is_zero() {
            acc.remove(w);
        }
    }
}

fn normalize<F: Field>(row: &mut Row<F>) {
    let inv = row[0].1.inv().expect("leading coefficient is nonzero");
    for (_, c) in row.iter_mut() {
        *c = c.mul(&inv);
    }
}

fn into_row<F: Field>(acc: BTreeMap<u64, F>) -> Row<F> {
    acc.into_iter().rev().collect()
}

/// Echelon basis whose rows have distinct pivots but are not back-substituted.
///
/// Reduction walks from the largest word down, so a residue never contains a
/// pivot word; the non-pivot words index a complement, which makes residues
/// coordinates in the quotient space.
#[derive(Clone, Debug)]
pub(crate) struct Echelon<F> {
    rows: Vec<Row<F>>,
    pivots: HashMap<u64, usize>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: HashMap::new(),
        }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, w: u64) -> bool {
        self.pivots.contains_key(&w)
    }

    pub fn rows(&self) -> &[Row<F>] {
        &self.rows
    }

    pub fn reduce_map(&self, mut acc: BTreeMap<u64, F>) -> BTreeMap<u64, F> {
        if self.rows.is_empty() {
            return acc;
        }
        let mut cursor = u64::MAX;
        loop {
            let hit = acc
                .range(..=cursor)
                .rev()
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = hit else { break };
            sub_row(&mut acc, &c, &self.rows[self.pivots[&k]]);
            if k == 0 {
                break;
            }
            cursor = k - 1;
        }
        acc
    }

    pub fn reduce(&self, v: &[(u64, F)]) -> Row<F> {
        into_row(self.reduce_map(v.iter().cloned().collect()))
    }

    /// Adds `v` if it is independent of the current rows; returns whether it was.
    pub fn insert(&mut self, v: &[(u64, F)]) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        normalize(&mut r);
        self.pivots.insert(r[0].0, self.rows.len());
        self.rows.push(r);
        true
    }

    /// Appends a row known to be in echelon position already: its leading word
    /// is not a pivot and none of its words is one either.
    pub fn push_unchecked(&mut self, mut row: Row<F>) {
        debug_assert!(!row.is_empty());
        debug_assert!(!self.pivots.contains_key(&row[0].0));
        if !row[0].1.is_one() {
            normalize(&mut row);
        }
        self.pivots.insert(row[0].0, self.rows.len());
        self.rows.push(row);
    }

    /// Back-substitutes into the unique reduced row-echelon form, rows sorted
    /// by decreasing pivot.
    pub fn into_reduced(self) -> Vec<Row<F>> {
        let mut rows = self.rows;
        rows.sort_by(|a, b| a[0].0.cmp(&b[0].0));
        let mut done = Reduced::new();
        for row in rows {
            done.push_reduced_increasing(row);
        }
        let mut rows = done.rows;
        rows.reverse();
        rows
    }
}

/// Fully reduced basis: no pivot word occurs in any other row.
#[derive(Clone, Debug)]
pub(crate) struct Reduced<F> {
    pub rows: Vec<Row<F>>,
    pub pivots: HashMap<u64, usize>,
}

impl<F: Field> Reduced<F> {
    pub fn new() -> Self {
        Reduced {
            rows: Vec::new(),
            pivots: HashMap::new(),
        }
    }

    /// One pass suffices: subtracting a reduced row never introduces a pivot word.
    pub fn reduce(&self, v: &[(u64, F)]) -> Row<F> {
        if !v.iter().any(|(w, _)| self.pivots.contains_key(w)) {
            return v.to_vec();
        }
        let mut acc: BTreeMap<u64, F> = v.iter().cloned().collect();
        for (w, c) in v {
            if let Some(&r) = self.pivots.get(w) {
                sub_row(&mut acc, c, &self.rows[r]);
            }
        }
        into_row(acc)
    }

    /// Used by back-substitution: rows arrive with increasing pivots, so the
    /// new row only needs reducing against what is already here.
    fn push_reduced_increasing(&mut self, row: Row<F>) {
        let head = row[0].clone();
        let tail = self.reduce(&row[1..]);
        let mut r = Vec::with_capacity(tail.len() + 1);
        r.push(head);
        r.extend(tail);
        normalize(&mut r);
        self.pivots.insert(r[0].0, self.rows.len());
        self.rows.push(r);
    }

    /// Inserts `v`, keeping the basis reduced. Returns whether the rank grew.
    pub fn insert(&mut self, v: &[(u64, F)]) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        normalize(&mut r);
        let p = r[0].0;
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by(|(i, _)| p.cmp(i)) {
                let c = row[pos].1.clone();
                let mut acc: BTreeMap<u64, F> = row.drain(..).collect();
                sub_row(&mut acc, &c, &r);
                *row = into_row(acc);
            }
        }
        self.pivots.insert(p, self.rows.len());
        self.rows.push(r);
        true
    }

    /// Rows sorted by decreasing pivot.
    pub fn into_sorted_rows(self) -> Vec<Row<F>> {
        let mut rows = self.rows;
        rows.sort_by(|a, b| b[0].0.cmp(&a[0].0));
        rows
    }
}
