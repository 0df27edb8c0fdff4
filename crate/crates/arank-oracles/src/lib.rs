//! Independent reference implementations ("oracles") used by the test
//! suites to cross-check the main algorithms. Everything here favors
//! obviousness over speed: Fourier–Motzkin instead of simplex, bitmask
//! dynamic programming instead of branch and bound, plain backtracking
//! instead of DSATUR, and a breadth-first closure over finite quotient
//! groups instead of lattice containment.

use std::collections::{HashMap, HashSet, VecDeque};

use arank_core::complex::SimplicialComplex;
use arank_core::grading::Grading;
use arank_core::graph::Graph;
use arank_core::lattice::Lattice;
use arank_core::lp::LinearSystem;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Feasibility of `A·x = b ∧ C·x ≥ d` by Fourier–Motzkin elimination.
/// Exponential in the worst case but exact; equalities are substituted
/// away first and every round keeps only primitive, pairwise-distinct
/// constraint directions (strongest right-hand side per direction) so the
/// test sizes stay workable.
pub fn fm_feasible(sys: &LinearSystem) -> bool {
    let vars = sys.vars();

    // Reduced row echelon form of the equality block.
    let mut eqs: Vec<(Vec<BigRational>, BigRational)> =
        sys.eqs().iter().map(|(a, b)| (a.clone(), b.clone())).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for c in 0..vars {
        let Some(p) = (rank..eqs.len()).find(|&i| !eqs[i].0[c].is_zero()) else {
            continue;
        };
        eqs.swap(rank, p);
        let inv = eqs[rank].0[c].recip();
        for x in eqs[rank].0.iter_mut() {
            *x *= &inv;
        }
        eqs[rank].1 *= &inv;
        for i in 0..eqs.len() {
            if i != rank && !eqs[i].0[c].is_zero() {
                let f = eqs[i].0[c].clone();
                for j in 0..vars {
                    let t = &f * &eqs[rank].0[j];
                    eqs[i].0[j] -= t;
                }
                let t = &f * &eqs[rank].1;
                eqs[i].1 -= t;
            }
        }
        pivots.push((rank, c));
        rank += 1;
        if rank == eqs.len() {
            break;
        }
    }
    if eqs[rank..].iter().any(|(_, b)| !b.is_zero()) {
        return false; // inconsistent equalities
    }

    // Cancel the pivot columns out of every inequality: pivot variables are
    // determined by the free ones, so the reduced system is equivalent.
    let mut cons: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    for (a, b) in sys.ineqs() {
        let mut a = a.clone();
        let mut b = b.clone();
        for &(er, ec) in &pivots {
            if !a[ec].is_zero() {
                let f = a[ec].clone();
                for j in 0..vars {
                    let t = &f * &eqs[er].0[j];
                    a[j] -= t;
                }
                let t = &f * &eqs[er].1;
                b -= t;
            }
        }
        cons.push((a, b));
    }
    let Some(mut cons) = fm_canonical(cons) else {
        return false;
    };

    let mut remaining: Vec<usize> =
        (0..vars).filter(|c| !pivots.iter().any(|&(_, pc)| pc == *c)).collect();
    while !remaining.is_empty() {
        // Eliminate the variable producing the fewest pairings; a variable
        // bounded on one side only erases its constraints outright.
        let (pick, k) = remaining
            .iter()
            .enumerate()
            .map(|(pick, &k)| {
                let pos = cons.iter().filter(|(a, _)| a[k].is_positive()).count();
                let neg = cons.iter().filter(|(a, _)| a[k].is_negative()).count();
                (pos * neg, pick, k)
            })
            .min()
            .map(|(_, pick, k)| (pick, k))
            .expect("remaining is nonempty");
        remaining.swap_remove(pick);

        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut next = Vec::new();
        for (a, b) in cons {
            if a[k].is_zero() {
                next.push((a, b));
            } else if a[k].is_positive() {
                pos.push((a, b));
            } else {
                neg.push((a, b));
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                // Positive multipliers cancel the k-th coefficient while
                // preserving the ≥ direction.
                let cp = -an[k].clone();
                let cn = ap[k].clone();
                let a: Vec<BigRational> =
                    (0..vars).map(|j| &cp * &ap[j] + &cn * &an[j]).collect();
                let b = &cp * bp + &cn * bn;
                next.push((a, b));
            }
        }
        match fm_canonical(next) {
            Some(c) => cons = c,
            None => return false,
        }
    }
    // Canonicalization dropped every satisfied 0-coefficient row and bailed
    // out on the violated ones, so reaching here means feasible.
    debug_assert!(cons.is_empty());
    true
}

/// Scales each `a·x ≥ b` to a primitive integer direction, keeps only the
/// largest right-hand side per direction, drops satisfied trivial rows, and
/// reports `None` on a violated trivial row (`0 ≥ b` with `b > 0`).
fn fm_canonical(
    rows: Vec<(Vec<BigRational>, BigRational)>,
) -> Option<Vec<(Vec<BigRational>, BigRational)>> {
    let mut best: std::collections::BTreeMap<Vec<BigInt>, BigRational> =
        std::collections::BTreeMap::new();
    for (a, b) in rows {
        if a.iter().all(Zero::is_zero) {
            if b.is_positive() {
                return None;
            }
            continue;
        }
        let lcm = a
            .iter()
            .map(BigRational::denom)
            .fold(BigInt::from(1), |l, d| l.lcm(d));
        let ints: Vec<BigInt> = a
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let gcd = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let dir: Vec<BigInt> = ints.iter().map(|x| x / &gcd).collect();
        let scaled = b * BigRational::new(lcm, gcd);
        best.entry(dir)
            .and_modify(|cur| {
                if scaled > *cur {
                    *cur = scaled.clone();
                }
            })
            .or_insert(scaled);
    }
    Some(
        best.into_iter()
            .map(|(dir, b)| (dir.into_iter().map(BigRational::from).collect(), b))
            .collect(),
    )
}

/// Plain rational Gaussian elimination; free variables pinned to zero,
/// `None` when inconsistent.
fn gauss_solve(
    mut rows: Vec<Vec<BigRational>>,
    mut rhs: Vec<BigRational>,
) -> Option<Vec<BigRational>> {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut pivot_of_col = vec![usize::MAX; n];
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        rhs[r] *= &inv;
        for i in 0..m {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..n {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
                let t = &f * &rhs[r];
                rhs[i] -= t;
            }
        }
        pivot_of_col[c] = r;
        r += 1;
        if r == m {
            break;
        }
    }
    if (r..m).any(|i| !rhs[i].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for c in 0..n {
        if pivot_of_col[c] != usize::MAX {
            x[c] = rhs[pivot_of_col[c]].clone();
        }
    }
    Some(x)
}

/// Membership `v ∈ L` via rational solving against the basis plus an
/// integrality check (valid because basis rows are independent).
pub fn lattice_member_oracle(l: &Lattice, v: &[BigInt]) -> bool {
    assert_eq!(v.len(), l.ambient());
    let r = l.rank();
    if r == 0 {
        return v.iter().all(Zero::is_zero);
    }
    let rows: Vec<Vec<BigRational>> = (0..l.ambient())
        .map(|j| (0..r).map(|i| BigRational::from(l.basis().get(i, j).clone())).collect())
        .collect();
    let rhs: Vec<BigRational> = v.iter().map(|x| BigRational::from(x.clone())).collect();
    let Some(c) = gauss_solve(rows, rhs) else {
        return false;
    };
    if !c.iter().all(BigRational::is_integer) {
        return false;
    }
    (0..l.ambient()).all(|j| {
        let s: BigRational = (0..r)
            .map(|i| BigRational::from(l.basis().get(i, j).clone()) * &c[i])
            .sum();
        s == BigRational::from(v[j].clone())
    })
}

/// Minimum number of faces covering all vertices, by subset dynamic
/// programming. `None` beyond 16 vertices.
pub fn delta_bruteforce(c: &SimplicialComplex) -> Option<usize> {
    let n = c.vertex_count();
    if n > 16 {
        return None;
    }
    if n == 0 {
        return Some(0);
    }
    let pos: HashMap<usize, usize> =
        c.vertices().iter().enumerate().map(|(p, &v)| (v, p)).collect();
    let mut is_face = vec![false; 1 << n];
    is_face[0] = true;
    for f in c.facets() {
        let fm = f.iter().fold(0usize, |m, v| m | (1 << pos[v]));
        let mut sub = fm;
        loop {
            is_face[sub] = true;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & fm;
        }
    }
    let full = (1usize << n) - 1;
    let mut dp = vec![u32::MAX; 1 << n];
    dp[0] = 0;
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut sub = rest;
        loop {
            let fmask = sub | (1 << v);
            if is_face[fmask] && dp[mask ^ fmask] != u32::MAX {
                dp[mask] = dp[mask].min(dp[mask ^ fmask] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Some(dp[full] as usize)
}

/// Chromatic number by plain backtracking in vertex order, no heuristics.
pub fn chromatic_bruteforce(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    fn extend(g: &Graph, colors: &mut Vec<usize>, v: usize, k: usize) -> bool {
        if v > g.vertex_count() {
            return true;
        }
        for c in 0..k {
            if (1..v).all(|w| colors[w] != c || !g.has_edge(w, v)) {
                colors[v] = c;
                if extend(g, colors, v + 1, k) {
                    return true;
                }
                colors[v] = usize::MAX;
            }
        }
        false
    }
    (1..=n)
        .find(|&k| extend(g, &mut vec![usize::MAX; n + 1], 1, k))
        .expect("n colors always suffice")
}

/// Coordinates of a finite quotient `Z^n / L` as `Z/d_1 × … × Z/d_n`.
struct FiniteCoords {
    left: arank_core::IntMatrix,
    mods: Vec<BigInt>,
    order: BigInt,
}

impl FiniteCoords {
    fn new(l: &Lattice) -> Option<Self> {
        if l.rank() != l.ambient() {
            return None; // infinite quotient
        }
        // Columns of `m` are the basis vectors, so Z^n/L ≅ Z^n/im(D)
        // via x ↦ left·x.
        let m = l.basis().transpose();
        let s = m.snf();
        let mods = s.diag.clone();
        let order = mods.iter().product();
        Some(FiniteCoords { left: s.left, mods, order })
    }

    fn coord(&self, x: &[BigInt]) -> Vec<BigInt> {
        let ux = self.left.mul_vec(x).expect("dimension checked by caller");
        ux.iter().zip(&self.mods).map(|(v, d)| v.mod_floor(d)).collect()
    }
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); n];
    e[i] = BigInt::from(1);
    e
}

fn add_mod(a: &[BigInt], b: &[BigInt], mods: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).zip(mods).map(|((x, y), d)| (x + y).mod_floor(d)).collect()
}

/// Decides directly, for finite grading groups, whether a group
/// epimorphism θ with `θ ∘ deg_G = deg_F` exists, by closing the relation
/// `{(deg_G(u), deg_F(u))}` under generator addition and checking it is a
/// well-defined map. Returns `None` when either quotient is infinite or
/// larger than `order_limit`.
pub fn finite_epimorphism_exists(g: &Grading, f: &Grading, order_limit: u64) -> Option<bool> {
    let n = g.ambient();
    if f.ambient() != n {
        return None;
    }
    let cg = FiniteCoords::new(g.lattice())?;
    let cf = FiniteCoords::new(f.lattice())?;
    if cg.order > BigInt::from(order_limit) || cf.order > BigInt::from(order_limit) {
        return None;
    }
    let gens_g: Vec<Vec<BigInt>> = (0..n).map(|i| cg.coord(&unit(n, i))).collect();
    let gens_f: Vec<Vec<BigInt>> = (0..n).map(|i| cf.coord(&unit(n, i))).collect();
    let zero_g: Vec<BigInt> = cg.mods.iter().map(|_| BigInt::zero()).collect();
    let zero_f: Vec<BigInt> = cf.mods.iter().map(|_| BigInt::zero()).collect();
    let mut theta: HashMap<Vec<BigInt>, Vec<BigInt>> = HashMap::new();
    theta.insert(zero_g.clone(), zero_f);
    let mut queue = VecDeque::from([zero_g]);
    while let Some(a) = queue.pop_front() {
        let x = theta[&a].clone();
        for i in 0..n {
            let a2 = add_mod(&a, &gens_g[i], &cg.mods);
            let x2 = add_mod(&x, &gens_f[i], &cf.mods);
            match theta.get(&a2) {
                Some(prev) => {
                    if *prev != x2 {
                        return Some(false);
                    }
                }
                None => {
                    theta.insert(a2.clone(), x2);
                    queue.push_back(a2);
                }
            }
        }
    }
    // θ ∘ (surjection) = surjection, so a well-defined θ is automatically
    // onto; the check below is a consistency assertion.
    let image: HashSet<&Vec<BigInt>> = theta.values().collect();
    Some(BigInt::from(image.len()) == cf.order)
}
