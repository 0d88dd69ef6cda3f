//! Exact rational relations among brackets of the dual derivation family.
//!
//! For each requested pair of even weights `(2i, 2j)` the derivation bracket
//! `[d_{2i}, d_{2j}]` is evaluated on both letters inside the free
//! associative algebra (a faithful representation of the free Lie algebra),
//! the letter images are stacked into word coordinates, and the exact
//! rational nullspace of the resulting matrix is computed. Each basis vector
//! is normalized to a primitive integer vector and re-verified by summing the
//! letter images.

use crate::deriv::{apply_to_poly, epsilon_dual, PolyImages};
use crate::lie::{poly_add_scaled, poly_sub, Poly};
use crate::GeomError;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use scalars::{nullspace, Int, Rational, Scalar};
use std::collections::HashMap;

/// Letter images of one weight-pair bracket, in associative coordinates.
struct BracketImages {
    on_a: Poly,
    on_b: Poly,
}

fn dual_images(weight: u64) -> Result<PolyImages, GeomError> {
    if weight < 2 || weight % 2 != 0 {
        return Err(GeomError::BadWeight(weight));
    }
    let n = (weight / 2) as i64 - 1;
    Ok(epsilon_dual(n)?.poly_images())
}

fn bracket_images(pair: (u64, u64)) -> Result<BracketImages, GeomError> {
    let left = dual_images(pair.0)?;
    let right = dual_images(pair.1)?;
    let on =
        |xa: &Poly, ya: &Poly| poly_sub(apply_to_poly(&left, ya), &apply_to_poly(&right, xa));
    Ok(BracketImages {
        on_a: on(&left.a, &right.a),
        on_b: on(&left.b, &right.b),
    })
}

/// Finds the exact rational nullspace of the brackets `[d_{2i}, d_{2j}]` for
/// the given weight pairs, as primitive integer coefficient vectors.
///
/// `max_degree` must be at least the largest weight plus two; smaller values
/// raise an insufficient-degree error rather than truncating.
pub fn pollack_relations(
    pairs: &[(u64, u64)],
    max_degree: usize,
) -> Result<Vec<Vec<Rational>>, GeomError> {
    let needed = pairs
        .iter()
        .flat_map(|&(p, q)| [p, q])
        .max()
        .map(|w| w as usize + 2)
        .unwrap_or(0);
    if needed > max_degree {
        return Err(GeomError::InsufficientDegree {
            needed,
            given: max_degree,
        });
    }
    let images: Vec<BracketImages> = pairs
        .iter()
        .map(|&pair| bracket_images(pair))
        .collect::<Result<_, _>>()?;

    // Rows are indexed by (which letter, word); columns by weight pair.
    let mut row_of: HashMap<(u8, Vec<u8>), usize> = HashMap::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (col, img) in images.iter().enumerate() {
        for (tag, poly) in [(0u8, &img.on_a), (1u8, &img.on_b)] {
            for (word, coeff) in poly.iter() {
                let key = (tag, word.clone());
                let next = rows.len();
                let row = *row_of.entry(key).or_insert_with(|| {
                    rows.push(vec![Rational::zero(); pairs.len()]);
                    next
                });
                rows[row][col] = coeff
                    .as_rational()
                    .expect("derivation images of letters have constant coefficients");
            }
        }
    }

    // A rowless matrix means every bracket vanished: the whole space is null.
    let basis = if rows.is_empty() {
        (0..pairs.len())
            .map(|i| {
                let mut v = vec![Rational::zero(); pairs.len()];
                v[i] = Rational::one();
                v
            })
            .collect()
    } else {
        nullspace(&rows)
    };
    let relations: Vec<Vec<Rational>> = basis.iter().map(|v| primitive_integer(v)).collect();

    for rel in &relations {
        let mut total_a = Poly::new();
        let mut total_b = Poly::new();
        for (c, img) in rel.iter().zip(&images) {
            let s = Scalar::from_rational(c.clone());
            poly_add_scaled(&mut total_a, &img.on_a, &s);
            poly_add_scaled(&mut total_b, &img.on_b, &s);
        }
        if !total_a.is_empty() || !total_b.is_empty() {
            return Err(GeomError::RelationCheckFailed);
        }
    }
    Ok(relations)
}

/// Scales a rational vector to coprime integers with positive leading entry.
fn primitive_integer(v: &[Rational]) -> Vec<Rational> {
    let mut denom_lcm = Int::one();
    for x in v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let scaled: Vec<Int> = v
        .iter()
        .map(|x| x.numer() * (&denom_lcm / x.denom()))
        .collect();
    let mut g = Int::zero();
    for x in &scaled {
        g = g.gcd(x);
    }
    if g.is_zero() {
        g = Int::one();
    }
    let sign = scaled
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| if x.is_negative() { -1 } else { 1 })
        .unwrap_or(1);
    let g = g * Int::from(sign);
    scaled
        .into_iter()
        .map(|x| Rational::from_integer(x / &g))
        .collect()
}

/// Renders one relation in the interchange format
/// `{"generators":[[10,4],[8,6]],"coeffs":["1","-3"]}`.
pub fn relation_to_json(pairs: &[(u64, u64)], coeffs: &[Rational]) -> serde_json::Value {
    serde_json::json!({
        "generators": pairs.iter().map(|&(p, q)| vec![p, q]).collect::<Vec<_>>(),
        "coeffs": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}
