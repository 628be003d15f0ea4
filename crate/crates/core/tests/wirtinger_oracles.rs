mod common;

use common::samples_dir;
use normalcut::wirtinger::{
    find_noncyclic_rep, parse_pd, verify_assignment, wirtinger_presentation, WirtingerPresentation,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn presentation(name: &str) -> WirtingerPresentation {
    let text = std::fs::read_to_string(samples_dir().join("pd").join(format!("{name}.json"))).unwrap();
    wirtinger_presentation(&parse_pd(&text).unwrap()).unwrap()
}

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return BigRational::zero() };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c].clone();
        for i in c + 1..n {
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let v = &m[c][j] * &f;
                m[i][j] -= v;
            }
        }
    }
    d
}

/// Alexander polynomial evaluated at `t`, up to sign and powers of `t`:
/// Fox derivatives of `over^s in over^-s out^-1` abelianized, one row and
/// one column deleted.
fn alexander_at(p: &WirtingerPresentation, t: i64) -> BigInt {
    let t = BigRational::from_integer(t.into());
    let n = p.generator_count;
    let mut m = vec![vec![BigRational::zero(); n]; p.relations.len()];
    for (row, r) in m.iter_mut().zip(&p.relations) {
        let ts = if r.sign > 0 { t.clone() } else { t.recip() };
        row[r.incoming] += ts.clone();
        row[r.outgoing] -= BigRational::one();
        row[r.over] += BigRational::one() - ts;
    }
    let minor: Vec<Vec<BigRational>> = m[..n - 1].iter().map(|row| row[1..].to_vec()).collect();
    let mut v = det(minor);
    let tn = t.numer().clone();
    while v.denom() % &tn == BigInt::zero() {
        v *= t.clone();
    }
    let mut num = v.to_integer().abs();
    while !num.is_zero() && &num % &tn == BigInt::zero() {
        num /= &tn;
    }
    num
}

#[test]
fn alexander_polynomial_fixes_crossing_signs() {
    // Trefoil t^2 - t + 1, figure-eight t^2 - 3t + 1.
    let trefoil = presentation("trefoil");
    assert_eq!(alexander_at(&trefoil, 3), BigInt::from(7));
    assert_eq!(alexander_at(&trefoil, 4), BigInt::from(13));
    let fig8 = presentation("figure8");
    assert_eq!(alexander_at(&fig8, 4), BigInt::from(5));
    assert_eq!(alexander_at(&fig8, 5), BigInt::from(11));
}

type P = Vec<usize>;

fn compose(a: &P, b: &P) -> P {
    b.iter().map(|&i| a[i]).collect()
}

fn inverse(a: &P) -> P {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

fn all_perms(n: usize) -> Vec<P> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q: P = p.iter().map(|&x| x).collect();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn satisfies(p: &WirtingerPresentation, images: &[P]) -> bool {
    p.relations.iter().all(|r| {
        let o = if r.sign > 0 { images[r.over].clone() } else { inverse(&images[r.over]) };
        compose(&compose(&o, &images[r.incoming]), &inverse(&o)) == images[r.outgoing]
    })
}

fn all_equal(images: &[P]) -> bool {
    images.iter().all(|g| *g == images[0])
}

/// Counts assignments of elements from `class` satisfying all relations
/// whose images are not all equal. For involution classes, distinct
/// involutions never generate a cyclic group, so this counts non-cyclic
/// representations.
fn brute_force(p: &WirtingerPresentation, class: &[P]) -> usize {
    let g = p.generator_count;
    let mut count = 0;
    let mut idx = vec![0usize; g];
    loop {
        let images: Vec<P> = idx.iter().map(|&i| class[i].clone()).collect();
        if satisfies(p, &images) && !all_equal(&images) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == g {
                return count;
            }
            idx[k] += 1;
            if idx[k] < class.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn involutions(n: usize, moved: usize) -> Vec<P> {
    all_perms(n)
        .into_iter()
        .filter(|p| compose(p, p).iter().enumerate().all(|(i, &j)| i == j))
        .filter(|p| p.iter().enumerate().filter(|(i, j)| i != *j).count() == moved)
        .collect()
}

#[test]
fn trefoil_brute_force_over_transpositions() {
    let p = presentation("trefoil");
    // Non-trivial 3-colourings of the trefoil.
    assert_eq!(brute_force(&p, &involutions(3, 2)), 6);
    let a = find_noncyclic_rep(&p, 3).unwrap();
    assert_eq!(a.n, 3);
    let images: Vec<P> = a.images.iter().map(|g| g.images().iter().map(|&x| x as usize).collect()).collect();
    assert!(satisfies(&p, &images));
    assert!(!all_equal(&images));
}

#[test]
fn figure_eight_brute_force_at_five() {
    let p = presentation("figure8");
    // No 3-colouring (determinant 5), but reflections of a pentagon work.
    assert_eq!(brute_force(&p, &involutions(3, 2)), 0);
    assert!(brute_force(&p, &involutions(5, 4)) > 0);
    let a = find_noncyclic_rep(&p, 5).unwrap();
    assert!(verify_assignment(&p, &a));
    let images: Vec<P> = a.images.iter().map(|g| g.images().iter().map(|&x| x as usize).collect()).collect();
    assert!(satisfies(&p, &images));
}

#[test]
fn unknot_images_are_cyclic() {
    let p = presentation("unknot");
    assert_eq!(p.generator_count, 1);
    assert!(find_noncyclic_rep(&p, 5).is_none());
}
