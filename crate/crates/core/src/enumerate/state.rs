/// A partially filled table that can always be completed to a rectangular
/// one as far as the filled cells are concerned: each symbol's cells stay
/// inside, and eventually fill, its row set times its column set.
///
/// Placing `v` at `(r, c)` is admissible when
/// 1. every filled cell in column `c` of a row of `v` holds `v`,
/// 2. every filled cell in row `r` of a column of `v` holds `v`,
/// 3. no other symbol already claims both row `r` and column `c`.
///
/// The rules are independent of fill order, and a complete table built by
/// admissible placements is rectangular.
#[derive(Clone)]
pub(crate) struct RectState {
    size: usize,
    symbols: usize,
    cells: Vec<u16>,
    row_mask: Vec<u64>,
    col_mask: Vec<u64>,
    /// `row_count[v * size + r]`: cells of `v` in row `r`.
    row_count: Vec<u16>,
    col_count: Vec<u16>,
}

pub(crate) const EMPTY: u16 = u16::MAX;

impl RectState {
    /// A `size x size` grid over symbols `0..symbols`; `size <= 64`.
    pub(crate) fn new(size: usize, symbols: usize) -> Self {
        assert!(size <= 64, "row masks are single words");
        Self {
            size,
            symbols,
            cells: vec![EMPTY; size * size],
            row_mask: vec![0; symbols],
            col_mask: vec![0; symbols],
            row_count: vec![0; symbols * size],
            col_count: vec![0; symbols * size],
        }
    }

    #[inline]
    pub(crate) fn get(&self, r: usize, c: usize) -> u16 {
        self.cells[r * self.size + c]
    }

    pub(crate) fn cells(&self) -> &[u16] {
        &self.cells
    }

    /// The symbol whose rectangle already covers `(r, c)`, if any.
    #[inline]
    pub(crate) fn forced(&self, r: usize, c: usize) -> Option<usize> {
        (0..self.symbols)
            .find(|&w| self.row_mask[w] >> r & 1 == 1 && self.col_mask[w] >> c & 1 == 1)
    }

    pub(crate) fn admissible(&self, r: usize, c: usize, v: usize) -> bool {
        debug_assert_eq!(self.get(r, c), EMPTY);
        let v16 = v as u16;
        let mut rows = self.row_mask[v] & !(1 << r);
        while rows != 0 {
            let r2 = rows.trailing_zeros() as usize;
            rows &= rows - 1;
            let x = self.get(r2, c);
            if x != EMPTY && x != v16 {
                return false;
            }
        }
        let mut cols = self.col_mask[v] & !(1 << c);
        while cols != 0 {
            let c2 = cols.trailing_zeros() as usize;
            cols &= cols - 1;
            let x = self.get(r, c2);
            if x != EMPTY && x != v16 {
                return false;
            }
        }
        // two symbols may both claim an empty cell; any claimant but `v` rules it out
        (0..self.symbols)
            .all(|w| w == v || self.row_mask[w] >> r & 1 == 0 || self.col_mask[w] >> c & 1 == 0)
    }

    pub(crate) fn place(&mut self, r: usize, c: usize, v: usize) {
        let n = self.size;
        self.cells[r * n + c] = v as u16;
        self.row_count[v * n + r] += 1;
        self.col_count[v * n + c] += 1;
        self.row_mask[v] |= 1 << r;
        self.col_mask[v] |= 1 << c;
    }

    pub(crate) fn remove(&mut self, r: usize, c: usize) {
        let n = self.size;
        let v = self.cells[r * n + c] as usize;
        self.cells[r * n + c] = EMPTY;
        self.row_count[v * n + r] -= 1;
        if self.row_count[v * n + r] == 0 {
            self.row_mask[v] &= !(1 << r);
        }
        self.col_count[v * n + c] -= 1;
        if self.col_count[v * n + c] == 0 {
            self.col_mask[v] &= !(1 << c);
        }
    }

    /// Symbols that may go at `(r, c)`, in increasing order.
    pub(crate) fn candidates(&self, r: usize, c: usize, out: &mut Vec<usize>) {
        out.clear();
        if let Some(w) = self.forced(r, c) {
            if self.admissible(r, c, w) {
                out.push(w);
            }
            return;
        }
        out.extend((0..self.symbols).filter(|&v| self.admissible(r, c, v)));
    }
}
