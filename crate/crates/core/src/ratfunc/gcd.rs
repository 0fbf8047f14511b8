use crate::multipoly::Poly;

/// Greatest common divisor, normalized to leading coefficient 1.
///
/// Recursive on the highest-index variable present, using a primitive
/// pseudo-remainder sequence with contents taken in the remaining variables.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.make_monic();
    }
    if b.is_zero() {
        return a.make_monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.vars());
    }
    let mono = a.monomial_content().gcd(&b.monomial_content());
    let a = a.div_monomial(&a.monomial_content()).expect("content divides");
    let b = b.div_monomial(&b.monomial_content()).expect("content divides");
    let g = gcd_no_monomial(&a, &b);
    g.mul_monomial(&mono).make_monic()
}

fn gcd_no_monomial(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.vars());
    }
    if a == b {
        return a.make_monic();
    }
    let x = match a.support().into_iter().chain(b.support()).max() {
        Some(x) => x,
        None => return Poly::one(a.vars()),
    };
    let (ca, pa) = content_split(a, x);
    let (cb, pb) = content_split(b, x);
    let c = poly_gcd(&ca, &cb);
    if pa.degree_in(x) == 0 || pb.degree_in(x) == 0 {
        return c;
    }
    let g = prs(pa, pb, x);
    (&c * &g).make_monic()
}

/// Splits `p` into its content with respect to variable `x` and the
/// primitive part.
fn content_split(p: &Poly, x: usize) -> (Poly, Poly) {
    let coeffs = p.coefficients_in(x);
    let mut cont = Poly::zero(p.vars());
    for c in coeffs.iter().rev() {
        if c.is_zero() {
            continue;
        }
        cont = poly_gcd(&cont, c);
        if cont.is_constant() {
            break;
        }
    }
    if cont.is_constant() {
        return (Poly::one(p.vars()), p.clone());
    }
    let prim = p.div_exact(&cont).expect("content divides");
    (cont, prim)
}

fn primitive(p: &Poly, x: usize) -> Poly {
    content_split(p, x).1
}

fn prem(a: &Poly, b: &Poly, x: usize) -> Poly {
    let db = b.degree_in(x);
    let bc = b.coefficients_in(x);
    let lb = bc[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(x) >= db {
        let dr = r.degree_in(x);
        let lr = r.coefficients_in(x)[dr as usize].clone();
        let mut shift = vec![Poly::zero(a.vars()); (dr - db) as usize + 1];
        shift[(dr - db) as usize] = lr;
        let t = Poly::from_coefficients_in(a.vars(), x, &shift);
        r = &(&lb * &r) - &(&t * b);
    }
    r
}

fn prs(a: Poly, b: Poly, x: usize) -> Poly {
    let (mut a, mut b) = if a.degree_in(x) >= b.degree_in(x) { (a, b) } else { (b, a) };
    loop {
        let r = prem(&a, &b, x);
        if r.is_zero() {
            return primitive(&b, x);
        }
        if r.degree_in(x) == 0 {
            return Poly::one(a.vars());
        }
        a = b;
        b = primitive(&r, x);
    }
}
