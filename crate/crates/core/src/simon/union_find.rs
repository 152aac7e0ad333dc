//! Union-find over a line of positions where only neighbouring intervals merge.

/// Partition of `0..len` into contiguous intervals.
///
/// Union by rank with path compression. Every union must join two adjacent
/// intervals, so each class is always an interval and its bounds are kept at
/// the root.
#[derive(Clone, Debug)]
pub struct IntervalUnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
    lo: Vec<u32>,
    hi: Vec<u32>,
}

impl IntervalUnionFind {
    /// Singletons `{0}, {1}, …, {len - 1}`.
    pub fn new(len: usize) -> Self {
        assert!(len <= u32::MAX as usize, "too many positions");
        IntervalUnionFind {
            parent: (0..len as u32).collect(),
            rank: vec![0; len],
            lo: (0..len as u32).collect(),
            hi: (0..len as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Representative of the interval containing `j`.
    pub fn find(&mut self, j: usize) -> usize {
        let mut root = j as u32;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = j as u32;
        while cur != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root as usize
    }

    /// Inclusive bounds of the interval containing `j`.
    pub fn bounds(&mut self, j: usize) -> (usize, usize) {
        let r = self.find(j);
        (self.lo[r] as usize, self.hi[r] as usize)
    }

    /// Merges the intervals containing `a` and `b`, which must be neighbours.
    /// Returns the new representative.
    pub fn union(&mut self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return ra;
        }
        debug_assert!(
            self.hi[ra] + 1 == self.lo[rb] || self.hi[rb] + 1 == self.lo[ra],
            "only adjacent intervals may be united"
        );
        let lo = self.lo[ra].min(self.lo[rb]);
        let hi = self.hi[ra].max(self.hi[rb]);
        let (root, child) = match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => (rb, ra),
            std::cmp::Ordering::Greater => (ra, rb),
            std::cmp::Ordering::Equal => {
                self.rank[ra] += 1;
                (ra, rb)
            }
        };
        self.parent[child] = root as u32;
        self.lo[root] = lo;
        self.hi[root] = hi;
        root
    }
}
