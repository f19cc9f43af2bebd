use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{block_product, TruncatedMultiPoly};
use crate::error::{Error, Result};
use crate::lr::SchurExpansion;
use crate::partition::Partition;

/// `s_λ(x₁, …, x_n)` truncated at total degree `max_degree`, summed over
/// semistandard tableaux of shape `λ` with entries in `1..=n`.
///
/// ```
/// use lrh::oracle::schur_poly;
/// use lrh::part;
/// let s = schur_poly(&part![2, 1], 3, 3);
/// assert_eq!(s.coefficient(&[1, 1, 1]), 2.into());
/// ```
pub fn schur_poly(lambda: &Partition, n: usize, max_degree: usize) -> TruncatedMultiPoly {
    let mut out = TruncatedMultiPoly::zero(n, max_degree);
    if lambda.length() > n || lambda.size() > max_degree {
        return out;
    }
    let shape = lambda.parts();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&p| vec![0; p as usize]).collect();
    let heights: Vec<usize> = lambda.conjugate().parts().iter().map(|&h| h as usize).collect();
    let mut content = vec![0u32; n];
    fill_ssyt(&cells, &heights, 0, n, &mut grid, &mut content, &mut out);
    out
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    heights: &[usize],
    idx: usize,
    n: usize,
    grid: &mut [Vec<usize>],
    content: &mut [u32],
    out: &mut TruncatedMultiPoly,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        out.add_term(content.to_vec(), BigInt::one());
        return;
    };
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    // the cells below in this column need strictly larger entries
    let below = heights[c] - r - 1;
    let lo = left.max(above);
    for v in lo..=n.saturating_sub(below) {
        grid[r][c] = v;
        content[v - 1] += 1;
        fill_ssyt(cells, heights, idx + 1, n, grid, content, out);
        content[v - 1] -= 1;
    }
}

/// Power sum `p_k = x₁ᵏ + … + x_nᵏ`.
pub fn power_sum(k: usize, n: usize, max_degree: usize) -> TruncatedMultiPoly {
    let mut out = TruncatedMultiPoly::zero(n, max_degree);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = k as u32;
        out.add_term(e, BigInt::one());
    }
    out
}

/// `p_μ = ∏ p_{μ_i}`.
pub fn power_sum_product(mu: &Partition, n: usize, max_degree: usize) -> TruncatedMultiPoly {
    mu.parts()
        .iter()
        .fold(TruncatedMultiPoly::one(n, max_degree), |acc, &k| {
            &acc * &power_sum(k as usize, n, max_degree)
        })
}

/// Expands the degree-`d` homogeneous component of a symmetric polynomial in
/// the Schur basis by repeatedly peeling the leading monomial.
///
/// Requires `num_vars ≥ d` so that every partition of `d` is visible.
///
/// ```
/// use lrh::oracle::{power_sum, schur_decompose};
/// use lrh::part;
/// let e = schur_decompose(&power_sum(2, 2, 2), 2).unwrap();
/// assert_eq!(e.coefficient(&part![2]), 1.into());
/// assert_eq!(e.coefficient(&part![1, 1]), (-1).into());
/// ```
pub fn schur_decompose(f: &TruncatedMultiPoly, d: usize) -> Result<SchurExpansion> {
    if f.num_vars() < d {
        return Err(Error::InvalidParameters(format!(
            "Schur decomposition in degree {d} needs at least {d} variables, have {}",
            f.num_vars()
        )));
    }
    let blocks = schur_decompose_blocks(f, &[f.num_vars()], &[d])?;
    Ok(blocks
        .into_iter()
        .map(|(mut key, c)| (key.pop().expect("one block"), c))
        .collect())
}

/// Multi-block Schur decomposition: the variables are split into consecutive
/// blocks of the given sizes, and the component of block degrees `degrees` is
/// written as `Σ a_{λ¹…λᵏ} s_{λ¹}(block 1) ⋯ s_{λᵏ}(block k)`.
///
/// Fails if a leading monomial is not a partition in every block, which
/// means the input is not symmetric within its blocks.
pub fn schur_decompose_blocks(
    f: &TruncatedMultiPoly,
    block_sizes: &[usize],
    degrees: &[usize],
) -> Result<BTreeMap<Vec<Partition>, BigInt>> {
    assert_eq!(block_sizes.len(), degrees.len());
    if block_sizes.iter().sum::<usize>() != f.num_vars() {
        return Err(Error::InvalidParameters(format!(
            "blocks {block_sizes:?} do not cover {} variables",
            f.num_vars()
        )));
    }
    let total: usize = degrees.iter().sum();
    if total > f.max_degree() {
        return Err(Error::InvalidParameters(format!(
            "block degrees {degrees:?} exceed the truncation {}",
            f.max_degree()
        )));
    }
    let offsets: Vec<usize> = block_sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let block_degree = |e: &[u32], b: usize| -> usize {
        e[offsets[b]..offsets[b] + block_sizes[b]]
            .iter()
            .map(|&x| x as usize)
            .sum()
    };
    let mut residual = f.filter(|e| (0..degrees.len()).all(|b| block_degree(e, b) == degrees[b]));
    let mut schur_cache: HashMap<(Partition, usize), TruncatedMultiPoly> = HashMap::new();
    let mut out = BTreeMap::new();
    while let Some((lead, coeff)) = residual.leading_term() {
        let coeff = coeff.clone();
        let mut shapes = Vec::with_capacity(block_sizes.len());
        for (b, &size) in block_sizes.iter().enumerate() {
            let slice = &lead[offsets[b]..offsets[b] + size];
            let shape = Partition::new(slice.to_vec())
                .map_err(|_| Error::NotSymmetric(format!("leading exponent {lead:?}")))?;
            shapes.push(shape);
        }
        let factors: Vec<&TruncatedMultiPoly> = {
            for (shape, &size) in shapes.iter().zip(block_sizes) {
                schur_cache
                    .entry((shape.clone(), size))
                    .or_insert_with(|| schur_poly(shape, size, shape.size()));
            }
            shapes
                .iter()
                .zip(block_sizes)
                .map(|(s, &size)| &schur_cache[&(s.clone(), size)])
                .collect()
        };
        let product = block_product(&factors, f.max_degree());
        residual = &residual - &product.scale(&coeff);
        out.insert(shapes, coeff);
    }
    Ok(out)
}
