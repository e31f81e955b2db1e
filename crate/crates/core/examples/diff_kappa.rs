use blobalg::algebra::{Algebra, Tab};
use blobalg::graded::psi_basis;
use blobalg::klr::klr_data;
use blobalg::tabcomb::Bitableau;

fn main() {
    let alg = Algebra::blob_cyclo(3, 5, 2).unwrap();
    let klr = klr_data(&alg).unwrap();
    let basis = psi_basis(klr).unwrap();
    let alg = basis.alg().clone();
    let bt = |c: &[usize]| Tab::B(Bitableau::new(3, c).unwrap());
    let (t_lam, s, t) = (bt(&[1, 3]), bt(&[1, 2]), bt(&[2, 3]));
    // paper's consistency identity: psi_{ts} = psi_{t,tmax} · psi_{tmax,s}
    let lhs = &basis.get(&t, &s).unwrap().element;
    let rhs = basis
        .get(&t, &t_lam).unwrap().element
        .mul(&alg, &basis.get(&t_lam, &s).unwrap().element);
    println!("psi(t,s) == psi(t,tl)·psi(tl,s): {}", *lhs == rhs);
    // and psi(kappa) equals 1 minus the sum of the other nonzero idempotents
    let t_kap = bt(&[]);
    let psi_k = &basis.get(&t_kap, &t_kap).unwrap().element;
    let mut sum_others = alg.one();
    for key in basis.klr.nonzero_keys() {
        if key != vec![1, 2, 3] {
            sum_others = sum_others.sub(&basis.klr.e(&key));
        }
    }
    println!("psi(kappa,kappa) == 1 - sum of other e(i): {}", *psi_k == sum_others);
}
