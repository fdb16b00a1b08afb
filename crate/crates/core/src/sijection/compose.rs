use super::{Elem, ItemOf, Region, Side, SignedSet, Sijection, Trace};
use crate::error::{Error, Result};
use crate::perm::Sign;

/// Garsia–Milne composite `psi ∘ phi : S => U` of `phi : S => T` and `psi : T => U`.
#[derive(Debug, Clone)]
pub struct Compose<Phi, Psi> {
    phi: Phi,
    psi: Psi,
}

/// Composes two sijections whose middle sets agree.
pub fn compose<Phi, Psi>(phi: Phi, psi: Psi) -> Result<Compose<Phi, Psi>>
where
    Phi: Sijection,
    Psi: Sijection<Source = Phi::Target>,
{
    if phi.target() != psi.source() {
        return Err(Error::Sijection(format!(
            "cannot compose: target {:?} differs from source {:?}",
            phi.target(),
            psi.source()
        )));
    }
    Ok(Compose { phi, psi })
}

impl<Phi, Psi> Compose<Phi, Psi> {
    pub fn first(&self) -> &Phi {
        &self.phi
    }

    pub fn second(&self) -> &Psi {
        &self.psi
    }
}

/// Next evaluator to apply while an element is in flight.
enum Pending<A, B, C> {
    Phi(Side<A, B>),
    Psi(Side<B, C>),
}

impl<Phi, Psi> Compose<Phi, Psi>
where
    Phi: Sijection,
    Psi: Sijection<Source = Phi::Target>,
{
    /// Bounces allowed before the evaluation is declared non-terminating.
    pub fn iteration_cap(&self) -> u128 {
        self.phi.target().size_bound().saturating_add(1)
    }

    fn middle_sign(&self, t: &ItemOf<Phi::Target>) -> Sign {
        self.phi.target().sign(t)
    }

    fn expect_middle(&self, t: &ItemOf<Phi::Target>, sign: Sign, who: &str) -> Result<()> {
        let got = self.middle_sign(t);
        if got != sign {
            return Err(Error::Sijection(format!(
                "{who} produced a middle element of sign {got}, expected {sign}: {t:?}"
            )));
        }
        Ok(())
    }

    fn bounce(&self, bounces: &mut u128) -> Result<()> {
        *bounces += 1;
        let cap = self.iteration_cap();
        if *bounces > cap {
            return Err(Error::IterationCap { cap });
        }
        Ok(())
    }

    /// Shared loop. `forward` selects the evaluators and which middle sign
    /// each factor must emit: forward, `phi` emits `T⁺` and `psi` emits `T⁻`;
    /// backward, the reverse.
    fn run(&self, x: Elem<Self>, trace: &mut Trace, forward: bool) -> Result<Elem<Self>> {
        let (phi_sign, psi_sign) = if forward {
            (Sign::Plus, Sign::Minus)
        } else {
            (Sign::Minus, Sign::Plus)
        };
        let mut pending = match x {
            Side::Source(s) => Pending::Phi(Side::Source(s)),
            Side::Target(u) => Pending::Psi(Side::Target(u)),
        };
        let mut bounces = 0u128;
        loop {
            pending = match pending {
                Pending::Phi(input) => {
                    let out = trace.nested(|t| {
                        if forward {
                            self.phi.forward_traced(input, t)
                        } else {
                            self.phi.backward_traced(input, t)
                        }
                    })?;
                    match out {
                        Side::Source(s) => return Ok(Side::Source(s)),
                        Side::Target(t) => {
                            self.expect_middle(&t, phi_sign, "first factor")?;
                            trace.record(Region::Middle, phi_sign, &t);
                            self.bounce(&mut bounces)?;
                            Pending::Psi(Side::Source(t))
                        }
                    }
                }
                Pending::Psi(input) => {
                    let out = trace.nested(|t| {
                        if forward {
                            self.psi.forward_traced(input, t)
                        } else {
                            self.psi.backward_traced(input, t)
                        }
                    })?;
                    match out {
                        Side::Target(u) => return Ok(Side::Target(u)),
                        Side::Source(t) => {
                            self.expect_middle(&t, psi_sign, "second factor")?;
                            trace.record(Region::Middle, psi_sign, &t);
                            self.bounce(&mut bounces)?;
                            Pending::Phi(Side::Target(t))
                        }
                    }
                }
            };
        }
    }
}

impl<Phi, Psi> Sijection for Compose<Phi, Psi>
where
    Phi: Sijection,
    Psi: Sijection<Source = Phi::Target>,
{
    type Source = Phi::Source;
    type Target = Psi::Target;

    fn source(&self) -> &Self::Source {
        self.phi.source()
    }

    fn target(&self) -> &Self::Target {
        self.psi.target()
    }

    fn forward_traced(&self, x: Elem<Self>, trace: &mut Trace) -> Result<Elem<Self>> {
        if !self.in_domain(&x) {
            return Err(Error::Sijection(format!(
                "{x:?} is not in the positive source or negative target"
            )));
        }
        self.run(x, trace, true)
    }

    fn backward_traced(&self, y: Elem<Self>, trace: &mut Trace) -> Result<Elem<Self>> {
        if !self.in_codomain(&y) {
            return Err(Error::Sijection(format!(
                "{y:?} is not in the negative source or positive target"
            )));
        }
        self.run(y, trace, false)
    }
}
