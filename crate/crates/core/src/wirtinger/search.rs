use serde::Serialize;

use super::perm::{class_representative, conjugacy_class, generated_group, is_cyclic, nontrivial_cycle_types, Perm};
use super::WirtingerPresentation;
use crate::par::{self, Execution};

/// A homomorphism from the knot group to `S_n`, given by the images of the
/// Wirtinger generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationAssignment {
    pub n: usize,
    pub cycle_type: Vec<usize>,
    pub images: Vec<Perm>,
    /// Order of the image subgroup.
    pub image_order: usize,
}

fn conj(over: &Perm, sign: i8, x: &Perm) -> Perm {
    let o = if sign > 0 { over.clone() } else { over.inverse() };
    o.conjugate(x)
}

/// Checks every relation, the common cycle type and that the image is not
/// cyclic, without trusting the search.
pub fn verify_assignment(p: &WirtingerPresentation, a: &PermutationAssignment) -> bool {
    if a.images.len() != p.generator_count || a.images.iter().any(|g| g.degree() != a.n) {
        return false;
    }
    if a.images.iter().any(|g| g.cycle_type() != a.cycle_type) {
        return false;
    }
    let relations_hold = p.relations.iter().all(|r| {
        conj(&a.images[r.over], r.sign, &a.images[r.incoming]) == a.images[r.outgoing]
    });
    let group = generated_group(&a.images);
    relations_hold && group.len() == a.image_order && !is_cyclic(&group)
}

/// Fills in generators forced by relations. Returns `false` on a
/// contradiction.
fn propagate(p: &WirtingerPresentation, assign: &mut [Option<Perm>]) -> bool {
    loop {
        let mut changed = false;
        for r in &p.relations {
            let Some(over) = assign[r.over].clone() else { continue };
            match (&assign[r.incoming], &assign[r.outgoing]) {
                (Some(i), Some(o)) => {
                    if conj(&over, r.sign, i) != *o {
                        return false;
                    }
                }
                (Some(i), None) => {
                    assign[r.outgoing] = Some(conj(&over, r.sign, i));
                    changed = true;
                }
                (None, Some(o)) => {
                    assign[r.incoming] = Some(conj(&over, -r.sign, o));
                    changed = true;
                }
                (None, None) => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(p: &WirtingerPresentation, class: &[Perm], assign: Vec<Option<Perm>>) -> Option<Vec<Perm>> {
    let Some(g) = assign.iter().position(Option::is_none) else {
        let images: Vec<Perm> = assign.into_iter().map(Option::unwrap).collect();
        return (!is_cyclic(&generated_group(&images))).then_some(images);
    };
    for c in class {
        let mut next = assign.clone();
        next[g] = Some(c.clone());
        if propagate(p, &mut next) {
            if let Some(found) = search(p, class, next) {
                return Some(found);
            }
        }
    }
    None
}

fn search_type(p: &WirtingerPresentation, t: &[usize]) -> Option<PermutationAssignment> {
    let class = conjugacy_class(t);
    let mut assign = vec![None; p.generator_count];
    // Conjugating a representation keeps it valid, so the first generator
    // can be fixed to one element of the class.
    assign[0] = Some(class_representative(t));
    if !propagate(p, &mut assign) {
        return None;
    }
    let images = search(p, &class, assign)?;
    let image_order = generated_group(&images).len();
    Some(PermutationAssignment { n: t.iter().sum(), cycle_type: t.to_vec(), images, image_order })
}

/// First representation with non-cyclic image into `S_n`, `3 <= n <= n_max`,
/// in order of `n`, then cycle type (largest parts first, decreasing
/// lexicographic), then lexicographic order of generator images.
pub fn find_noncyclic_rep(p: &WirtingerPresentation, n_max: usize) -> Option<PermutationAssignment> {
    find_noncyclic_rep_with(p, n_max, Execution::default())
}

pub fn find_noncyclic_rep_with(
    p: &WirtingerPresentation,
    n_max: usize,
    exec: Execution,
) -> Option<PermutationAssignment> {
    (3..=n_max).find_map(|n| {
        let types = nontrivial_cycle_types(n);
        par::find_map_first(exec, &types, |t| search_type(p, t))
    })
}

#[cfg(test)]
mod tests {
    use super::super::samples::*;
    use super::super::{parse_pd, wirtinger_presentation};
    use super::*;

    fn presentation(text: &str) -> WirtingerPresentation {
        wirtinger_presentation(&parse_pd(text).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_maps_onto_s3() {
        let p = presentation(TREFOIL);
        let a = find_noncyclic_rep(&p, 3).unwrap();
        assert_eq!(a.n, 3);
        assert_eq!(a.cycle_type, vec![2, 1]);
        assert_eq!(a.image_order, 6);
        assert!(verify_assignment(&p, &a));
    }

    #[test]
    fn unknot_has_no_noncyclic_image() {
        let p = presentation(UNKNOT);
        assert_eq!(find_noncyclic_rep(&p, 5), None);
    }

    #[test]
    fn figure_eight_found_by_five() {
        let p = presentation(FIGURE_EIGHT);
        let a = find_noncyclic_rep(&p, 5).unwrap();
        assert!(a.n <= 5);
        assert!(verify_assignment(&p, &a));
    }

    #[test]
    fn conjugated_assignment_is_valid() {
        let p = presentation(FIGURE_EIGHT);
        let a = find_noncyclic_rep(&p, 5).unwrap();
        for h in conjugacy_class(&[2, 1, 1, 1]).iter().chain(&conjugacy_class(&[3, 2])) {
            let h = if h.degree() == a.n { h.clone() } else { continue };
            let b = PermutationAssignment { images: a.images.iter().map(|g| h.conjugate(g)).collect(), ..a.clone() };
            assert!(verify_assignment(&p, &b));
        }
    }

    #[test]
    fn tampered_assignment_is_rejected() {
        let p = presentation(TREFOIL);
        let mut a = find_noncyclic_rep(&p, 3).unwrap();
        a.images[1] = a.images[0].clone();
        assert!(!verify_assignment(&p, &a));
    }

    #[test]
    fn search_is_deterministic() {
        let p = presentation(FIGURE_EIGHT);
        let seq = find_noncyclic_rep_with(&p, 5, Execution::Sequential);
        let par = find_noncyclic_rep_with(&p, 5, Execution::Parallel);
        assert_eq!(seq, par);
    }
}
