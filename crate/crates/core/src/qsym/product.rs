use crate::composition::{quasi_shuffles, shuffles};

use super::convert::convert;
use super::element::{Basis, QSymElement};

fn multiply_native(f: &QSymElement, g: &QSymElement) -> QSymElement {
    let basis = f.basis();
    let mut out = QSymElement::zero(basis);
    for (a, x) in f.terms() {
        for (b, y) in g.terms() {
            let c = x * y;
            let words = match basis {
                Basis::Psi => shuffles(a, b),
                Basis::Monomial => quasi_shuffles(a, b),
                Basis::Fundamental => unreachable!(),
            };
            for w in words {
                out.add_term(w, c.clone());
            }
        }
    }
    out
}

/// The product in `QSym`, returned in the basis of `f`.
///
/// `psi` multiplies by shuffles, `M` by quasi-shuffles, and `L` goes through `M`.
pub fn multiply(f: &QSymElement, g: &QSymElement) -> QSymElement {
    match f.basis() {
        Basis::Fundamental => {
            let fm = convert(f, Basis::Monomial);
            let gm = convert(g, Basis::Monomial);
            convert(&multiply_native(&fm, &gm), Basis::Fundamental)
        }
        basis => multiply_native(f, &convert(g, basis)),
    }
}
