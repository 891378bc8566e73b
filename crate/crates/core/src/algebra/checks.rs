use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;

use num_traits::Zero;

use super::{Epsilon, Family, Gen, Mode, Preset, SuperVector};
use crate::report::CheckReport;
use crate::scalar::{frac, int, QSqrt2};

/// `[x,y] = −(−1)^{|x||y|}[y,x]` on all basis pairs with |mode| ≤ `window`.
pub fn super_skew_check(preset: Preset, window: i64) -> CheckReport {
    let mut rep = CheckReport::new("super-skew");
    let basis = preset.basis_window(window);
    for &x in &basis {
        for &y in &basis {
            let xy = preset.bracket_gens(x, y).expect("basis in lattice");
            let yx = preset.bracket_gens(y, x).expect("basis in lattice");
            let sign = -preset.parity(x).koszul(preset.parity(y));
            rep.compare(|| vec![x.to_string(), y.to_string()], &xy, &yx.scaled(&int(sign)));
        }
    }
    rep
}

/// `[x,[y,z]] = [[x,y],z] + (−1)^{|x||y|}[y,[x,z]]` on all basis triples.
pub fn super_jacobi_check(preset: Preset, window: i64) -> CheckReport {
    let mut rep = CheckReport::new("super-jacobi");
    let basis = preset.basis_window(window);
    let br = |a: &SuperVector, b: &SuperVector| preset.bracket(a, b).expect("closed under bracket");
    for &x in &basis {
        let vx = SuperVector::basis(x);
        for &y in &basis {
            let vy = SuperVector::basis(y);
            let xy = br(&vx, &vy);
            let sign = int(preset.parity(x).koszul(preset.parity(y)));
            for &z in &basis {
                let vz = SuperVector::basis(z);
                let lhs = br(&vx, &br(&vy, &vz));
                let mut rhs = br(&xy, &vz);
                rhs.add_scaled(&sign, &br(&vy, &br(&vx, &vz)));
                rep.compare(|| vec![x.to_string(), y.to_string(), z.to_string()], &lhs, &rhs);
            }
        }
    }
    rep
}

/// `φ: Sbar^{1/2} → Sbar^0`, `L_m ↦ ½L_{2m}`, `W_m ↦ W_{2m}`, `G_{m+½} ↦ (1/√2)G_{2m+1}`.
pub fn phi(g: Gen) -> SuperVector<QSqrt2> {
    let image = Gen::new(g.family, Mode(2 * g.mode.doubled()));
    let c = match g.family {
        Family::L => QSqrt2::from(frac(1, 2)),
        Family::W => QSqrt2::from(int(1)),
        Family::G => QSqrt2::new(int(0), frac(1, 2)),
        _ => QSqrt2::zero(),
    };
    SuperVector::term(c, image)
}

/// Homomorphism property and injectivity of [`phi`] on the window.
pub fn phi_embedding_check(window: i64) -> CheckReport {
    let src = Preset::Sbar(Epsilon::Half);
    let dst = Preset::Sbar(Epsilon::Zero);
    let mut rep = CheckReport::new("phi-embedding");
    let basis = src.basis_window(window);
    let extend = |v: &SuperVector| v.map_coeffs(|c| QSqrt2::from(c.clone())).map_basis(|g| phi(*g));
    for &x in &basis {
        for &y in &basis {
            let lhs = extend(&src.bracket_gens(x, y).expect("basis in lattice"));
            let rhs = dst.bracket(&phi(x), &phi(y)).expect("image in lattice");
            rep.compare(|| vec![x.to_string(), y.to_string()], &lhs, &rhs);
        }
    }
    let mut images = BTreeSet::new();
    for &x in &basis {
        let img = phi(x);
        let key = img.keys().next().copied();
        match key {
            Some(g) if img.len() == 1 && dst.contains(g) && images.insert(g) => rep.pass(),
            _ => rep.fail(vec![x.to_string()], "distinct basis image".to_string(), img.to_string()),
        }
    }
    rep
}
