use alloc::vec::Vec;

use crate::{Alphabet, Morphism, Word};

/// Fixed-point prefixes as displayed in the literature, 40 letters each.
pub const X_GAMMA_40: &str = "acabacacabacabacabacacabacabacacabacabac";
pub const W_MU_40: &str = "xyxxyxyxyxxyxyxxyxyxxyxyxyxxyxyxxyxyxyxx";
pub const X_THETA_40: &str = "abbabaabbaababbabaababbaabbabaabbaababba";
pub const X_RHO_40: &str = "bbabbabbababbabbabbababbabbabbababbabbab";

pub const P1: &str = "bacacab";
pub const P2: &str = "bacacabacabacabacacab";

/// The eight elements of stabilizer level 2, by `|φ(a)|`:
/// γ₀², γ₁², γ₂γ₁, γ₃γ₁, γ₂², γ₁γ₃, γ₂γ₃, γ₃².
pub const LEVEL_TWO: [&str; 8] = [
    "a->-,b->acabacabacacab,c->acabacacab",
    "a->a,b->cabacabacacab,c->cabacacab",
    "a->ac,b->abacabacacab,c->abacacab",
    "a->aca,b->bacabacacab,c->bacacab",
    "a->acab,b->acabacacab,c->acacab",
    "a->acaba,b->cabacacab,c->cacab",
    "a->acabac,b->abacacab,c->acab",
    "a->acabaca,b->bacacab,c->cab",
];

/// Level-3 elements that are not products of three level-1 elements.
pub const LEVEL_THREE_EXTRA: [&str; 2] = [
    "a->acabacac,b->abacabacacabacabacabacacab,c->abacabacabacacab",
    "a->acabacaca,b->bacabacacabacabacabacacab,c->bacabacabacacab",
];

/// The named morphisms every check is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixtures {
    pub rho: Morphism,
    pub theta: Morphism,
    pub tau: Morphism,
    pub gamma: Morphism,
    pub mu: Morphism,
    pub pi: Morphism,
    pub gamma0: Morphism,
    pub gamma1: Morphism,
    pub gamma2: Morphism,
    pub gamma3: Morphism,
    pub g1: Morphism,
    pub g2: Morphism,
}

fn endo(alphabet: &Alphabet, literal: &str) -> Morphism {
    Morphism::parse_with(literal, alphabet, alphabet).expect("fixture literal")
}

impl Fixtures {
    pub const NAMES: [&'static str; 12] = [
        "rho", "theta", "tau", "gamma", "mu", "pi", "gamma0", "gamma1", "gamma2", "gamma3", "g1",
        "g2",
    ];

    pub fn standard() -> Self {
        let ab = Alphabet::parse("ab").unwrap();
        let abc = Alphabet::parse("abc").unwrap();
        let xy = Alphabet::parse("xy").unwrap();
        Fixtures {
            rho: endo(&ab, "a->bbaba,b->bba"),
            theta: endo(&ab, "a->ab,b->ba"),
            tau: endo(&ab, "a->abbab,b->abb"),
            gamma: endo(&abc, "a->aca,b->cab,c->b"),
            mu: endo(&xy, "x->xy,y->xxy"),
            pi: Morphism::parse_with("x->ac,y->ab", &xy, &abc).unwrap(),
            gamma0: endo(&abc, "a->-,b->acacab,c->acab"),
            gamma1: endo(&abc, "a->a,b->cacab,c->cab"),
            gamma2: endo(&abc, "a->ac,b->acab,c->ab"),
            gamma3: endo(&abc, "a->aca,b->cab,c->b"),
            g1: endo(&xy, "x->xy,y->x"),
            g2: endo(&xy, "x->x,y->yx"),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Morphism> {
        Some(match name {
            "rho" => &self.rho,
            "theta" => &self.theta,
            "tau" => &self.tau,
            "gamma" => &self.gamma,
            "mu" => &self.mu,
            "pi" => &self.pi,
            "gamma0" => &self.gamma0,
            "gamma1" => &self.gamma1,
            "gamma2" => &self.gamma2,
            "gamma3" => &self.gamma3,
            "g1" => &self.g1,
            "g2" => &self.g2,
            _ => return None,
        })
    }

    fn get_mut(&mut self, name: &str) -> Option<&mut Morphism> {
        Some(match name {
            "rho" => &mut self.rho,
            "theta" => &mut self.theta,
            "tau" => &mut self.tau,
            "gamma" => &mut self.gamma,
            "mu" => &mut self.mu,
            "pi" => &mut self.pi,
            "gamma0" => &mut self.gamma0,
            "gamma1" => &mut self.gamma1,
            "gamma2" => &mut self.gamma2,
            "gamma3" => &mut self.gamma3,
            "g1" => &mut self.g1,
            "g2" => &mut self.g2,
            _ => return None,
        })
    }

    /// The standard fixtures with the images of the first two letters of
    /// `name` swapped. Used to check that the suite notices a broken fixture.
    pub fn corrupted(name: &str) -> Option<Self> {
        let mut fixtures = Self::standard();
        let phi = fixtures.get_mut(name)?;
        let mut images: Vec<Word> = phi.images().to_vec();
        images.swap(0, 1);
        *phi = Morphism::new(phi.source().clone(), phi.target().clone(), images).ok()?;
        Some(fixtures)
    }

    /// γ₀, γ₁, γ₂, γ₃
    pub fn level_one(&self) -> [&Morphism; 4] {
        [&self.gamma0, &self.gamma1, &self.gamma2, &self.gamma3]
    }
}
