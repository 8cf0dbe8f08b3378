//! Backtracking embedding counter shared by every exact count.
//!
//! A [`Plan`] fixes the order in which pattern vertices are placed: pinned
//! vertices first (in anchor order), then greedily the vertex with the most
//! edges back into the placed prefix, ties broken by total degree and then
//! by smaller index. Each later vertex's candidates are the intersection of
//! the host rows of its placed neighbors.

use crate::digraph::Digraph;

/// Edge between a position and an earlier one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Dir {
    /// earlier -> this: candidates lie in the earlier image's out-row.
    FromPlaced,
    /// this -> earlier: candidates lie in the earlier image's in-row.
    ToPlaced,
}

#[derive(Debug, Clone)]
pub(crate) struct Plan {
    /// Pattern vertex placed at each position.
    pub order: Vec<usize>,
    /// Constraints of each position against earlier positions.
    cons: Vec<Vec<(usize, Dir)>>,
    pinned: usize,
    /// Positions from here on only touch earlier positions (not each other).
    hom_tail: usize,
}

impl Plan {
    pub fn new(d: &Digraph, pinned: &[usize]) -> Plan {
        let v = d.n();
        let mut placed = vec![false; v];
        let mut order = Vec::with_capacity(v);
        for &p in pinned {
            placed[p] = true;
            order.push(p);
        }
        let mut back = vec![0usize; v];
        for &p in pinned {
            for u in d.out_neighbors(p).chain(d.in_neighbors(p)) {
                back[u] += 1;
            }
        }
        while order.len() < v {
            let next = (0..v)
                .filter(|&u| !placed[u])
                .max_by_key(|&u| (back[u], d.degree(u), std::cmp::Reverse(u)))
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
            for u in d.out_neighbors(next).chain(d.in_neighbors(next)) {
                back[u] += 1;
            }
        }
        let mut pos = vec![0; v];
        for (i, &u) in order.iter().enumerate() {
            pos[u] = i;
        }
        let cons: Vec<Vec<(usize, Dir)>> = order
            .iter()
            .enumerate()
            .map(|(i, &u)| {
                let mut c: Vec<(usize, Dir)> = d
                    .in_neighbors(u)
                    .filter(|&w| pos[w] < i)
                    .map(|w| (pos[w], Dir::FromPlaced))
                    .chain(
                        d.out_neighbors(u)
                            .filter(|&w| pos[w] < i)
                            .map(|w| (pos[w], Dir::ToPlaced)),
                    )
                    .collect();
                c.sort_unstable_by_key(|&(q, _)| q);
                c
            })
            .collect();
        let mut hom_tail = v;
        while hom_tail > pinned.len()
            && cons[hom_tail..]
                .iter()
                .all(|c| c.iter().all(|&(q, _)| q < hom_tail - 1))
        {
            hom_tail -= 1;
        }
        Plan {
            order,
            cons,
            pinned: pinned.len(),
            hom_tail,
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }
}

/// Host adjacency as fixed-width rows.
pub(crate) struct Host<const W: usize> {
    pub n: usize,
    pub out: Vec<[u64; W]>,
    pub inn: Vec<[u64; W]>,
    pub all: [u64; W],
}

impl<const W: usize> Host<W> {
    pub fn from_digraph(d: &Digraph) -> Self {
        let n = d.n();
        assert!(d.words() <= W);
        let copy = |row: &[u64]| {
            let mut r = [0u64; W];
            r[..row.len()].copy_from_slice(row);
            r
        };
        let mut all = [0u64; W];
        for v in 0..n {
            all[v >> 6] |= 1 << (v & 63);
        }
        Host {
            n,
            out: (0..n).map(|u| copy(d.out_row(u))).collect(),
            inn: (0..n).map(|u| copy(d.in_row(u))).collect(),
            all,
        }
    }
}

impl Host<1> {
    pub fn empty_small() -> Self {
        Host {
            n: 0,
            out: Vec::new(),
            inn: Vec::new(),
            all: [0],
        }
    }

    /// Refills from a pair code (see `Tournament::from_code`).
    pub fn load_code(&mut self, n: usize, code: u64) {
        debug_assert!(n <= 11);
        self.n = n;
        self.out.clear();
        self.out.resize(n, [0]);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if code >> k & 1 == 1 {
                    self.out[i][0] |= 1 << j;
                } else {
                    self.out[j][0] |= 1 << i;
                }
                k += 1;
            }
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        self.all = [all];
        self.inn.clear();
        self.inn
            .extend((0..n).map(|u| [all & !self.out[u][0] & !(1 << u)]));
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Halt {
    Budget,
    Overflow,
}

/// Reusable search state.
pub(crate) struct Search<'p> {
    plan: &'p Plan,
    img: Vec<usize>,
    budget: u64,
    work: u64,
    limit: u128,
    total: u128,
}

impl<'p> Search<'p> {
    pub fn new(plan: &'p Plan, budget: u64) -> Self {
        Search {
            plan,
            img: vec![0; plan.len()],
            budget,
            work: 0,
            limit: u128::MAX,
            total: 0,
        }
    }

    /// Stop as soon as the running total reaches `limit`.
    pub fn with_limit(mut self, limit: u128) -> Self {
        self.limit = limit;
        self
    }

    pub fn work(&self) -> u64 {
        self.work
    }

    /// Counts maps extending `anchor` (images of the pinned positions).
    /// Injective maps are labeled copies; otherwise homomorphisms.
    pub fn count<const W: usize>(
        &mut self,
        host: &Host<W>,
        anchor: &[usize],
        injective: bool,
    ) -> Result<u128, Halt> {
        debug_assert_eq!(anchor.len(), self.plan.pinned);
        self.total = 0;
        let mut used = [0u64; W];
        for (p, &x) in anchor.iter().enumerate() {
            self.img[p] = x;
            used[x >> 6] |= 1 << (x & 63);
        }
        if self.plan.len() == 0 {
            return Ok(1);
        }
        match self.rec(host, self.plan.pinned, &mut used, injective) {
            Ok(()) | Err(Stop::Limit) => Ok(self.total),
            Err(Stop::Halt(h)) => Err(h),
        }
    }

    fn candidates<const W: usize>(&self, host: &Host<W>, p: usize) -> [u64; W] {
        let mut cand = host.all;
        for &(q, dir) in &self.plan.cons[p] {
            let row = match dir {
                Dir::FromPlaced => &host.out[self.img[q]],
                Dir::ToPlaced => &host.inn[self.img[q]],
            };
            for w in 0..W {
                cand[w] &= row[w];
            }
        }
        cand
    }

    fn add(&mut self, x: u128) -> Result<(), Stop> {
        self.total = self
            .total
            .checked_add(x)
            .ok_or(Stop::Halt(Halt::Overflow))?;
        if self.total >= self.limit {
            Err(Stop::Limit)
        } else {
            Ok(())
        }
    }

    fn rec<const W: usize>(
        &mut self,
        host: &Host<W>,
        p: usize,
        used: &mut [u64; W],
        injective: bool,
    ) -> Result<(), Stop> {
        self.work += 1;
        if self.work > self.budget {
            return Err(Stop::Halt(Halt::Budget));
        }
        let v = self.plan.len();
        if p == v {
            return self.add(1);
        }
        if !injective && p >= self.plan.hom_tail {
            let mut prod: u128 = 1;
            for q in p..v {
                let c: u32 = self.candidates(host, q).iter().map(|w| w.count_ones()).sum();
                prod = prod
                    .checked_mul(c as u128)
                    .ok_or(Stop::Halt(Halt::Overflow))?;
                if prod == 0 {
                    break;
                }
            }
            return self.add(prod);
        }
        let mut cand = self.candidates(host, p);
        if injective {
            for w in 0..W {
                cand[w] &= !used[w];
            }
        }
        if p + 1 == v {
            let c: u32 = cand.iter().map(|w| w.count_ones()).sum();
            return self.add(c as u128);
        }
        for w in 0..W {
            let mut word = cand[w];
            while word != 0 {
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                let x = w * 64 + b;
                self.img[p] = x;
                used[w] |= 1 << b;
                let r = self.rec(host, p + 1, used, injective);
                used[w] &= !(1 << b);
                r?;
            }
        }
        Ok(())
    }
}

enum Stop {
    Limit,
    Halt(Halt),
}
