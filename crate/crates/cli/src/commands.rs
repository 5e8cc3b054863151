use abelcodes::codes::{all_minimal_codes, code_equivalence_classes, weight_distribution_with, FieldSpec};
use abelcodes::cocyclic::{eta_bruteforce_with, DEFAULT_CAP};
use abelcodes::eta::eta_with;
use abelcodes::{extend_to_automorphism, AbelianGroup, EnumOptions, Error, Exec, Subgroup};
use serde::{Deserialize, Serialize};

use crate::parse_elements;
use crate::report::{
    CodeRow, CodesOutcome, ComponentOutcome, EtaOutcome, Input, InventoryOutcome, InventoryRow, OrbitOutcome, Payload,
    WitnessOutcome,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    #[default]
    Formula,
    Brute,
    Both,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Brute => "brute",
            Method::Both => "both",
        }
    }
}

/// Options shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct Common {
    pub cap: u64,
    pub exec: Exec,
}

impl Default for Common {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, exec: Exec::default() }
    }
}

impl Common {
    fn opts(&self) -> EnumOptions {
        EnumOptions::default().with_cap(self.cap).with_exec(self.exec)
    }

    /// Input echo for `spec`, and the parsed group.
    fn start(&self, spec: &str) -> (Input, Result<AbelianGroup, Error>) {
        let g = AbelianGroup::parse(spec);
        let input = Input {
            group: Some(spec.to_string()),
            basis_orders: g.as_ref().ok().map(|g| g.generator_orders().to_vec()),
            cap: self.cap,
            ..Input::default()
        };
        (input, g)
    }
}

/// A computed payload together with the input echo.
pub type Outcome = (Input, Result<Payload, Error>);

pub fn eta(spec: &str, method: Method, common: &Common) -> Outcome {
    let (mut input, g) = common.start(spec);
    input.method = Some(method.name().to_string());
    let run = || -> Result<Payload, Error> {
        let g = g?;
        let opts = common.opts();
        let formula = match method {
            Method::Brute => None,
            _ => Some(eta_with(&g, &opts)?),
        };
        let brute = match method {
            Method::Formula => None,
            _ => Some(eta_bruteforce_with(&g, &opts)?.eta),
        };
        let value = formula.as_ref().map(|r| r.value).or(brute).unwrap_or_default();
        Ok(Payload::Eta(EtaOutcome {
            group: g.to_string(),
            order: g.order(),
            tau: g.tau(),
            value,
            formula: formula.as_ref().map(|r| r.value),
            agreement: formula.as_ref().zip(brute).map(|(f, b)| f.value == b),
            derivation: formula.map(|r| r.derivation),
            brute_force: brute,
            sylow_homocyclic: g.is_homocyclic_sylowwise(),
        }))
    };
    (input, run())
}

pub fn inventory(spec: &str, common: &Common) -> Outcome {
    let (input, g) = common.start(spec);
    let run = || -> Result<Payload, Error> {
        let g = g?;
        let inv = eta_bruteforce_with(&g, &common.opts())?;
        // largest type first, matching the usual listing from G downwards
        let rows = inv
            .classes
            .iter()
            .rev()
            .map(|(t, c)| InventoryRow {
                iso_type: t.to_string(),
                count: c.count,
                representative: c.representative.basis().to_vec(),
            })
            .collect();
        Ok(Payload::Inventory(InventoryOutcome {
            group: g.to_string(),
            eta: inv.eta,
            tau: g.tau(),
            cocyclic_subgroups: inv.total_subgroups(),
            rows,
        }))
    };
    (input, run())
}

pub fn witness(spec: &str, h_spec: &str, k_spec: &str, common: &Common) -> Outcome {
    let (mut input, g) = common.start(spec);
    input.h = Some(h_spec.to_string());
    input.k = Some(k_spec.to_string());
    let run = || -> Result<Payload, Error> {
        let g = g?;
        let h = Subgroup::from_generators(&g, &parse_elements(&g, h_spec)?)?;
        let k = Subgroup::from_generators(&g, &parse_elements(&g, k_spec)?)?;
        let w = extend_to_automorphism(&g, &h, &k)?;
        let components = w
            .components
            .iter()
            .map(|c| ComponentOutcome {
                prime: c.prime,
                x: c.x.clone(),
                y: c.y.clone(),
                m: c.m_exponent,
                case: c.theta.case,
                theta_domain: c.theta.domain.clone(),
                theta_images: c.theta.hom.images().to_vec(),
                fallback: c.fallback_reason.clone(),
            })
            .collect();
        Ok(Payload::Witness(WitnessOutcome {
            group: g.to_string(),
            h: h.basis().to_vec(),
            k: k.basis().to_vec(),
            iso_type: h.iso_type().to_string(),
            quotient_type: h.quotient_type().to_string(),
            phi: w.phi.images().to_vec(),
            components,
            verified: w.verify().is_ok(),
        }))
    };
    (input, run())
}

pub fn codes(spec: &str, q: u64, weights: bool, orbits: bool, common: &Common) -> Outcome {
    let (mut input, g) = common.start(spec);
    input.q = Some(q);
    input.weights = Some(weights);
    input.orbits = Some(orbits);
    let run = || -> Result<Payload, Error> {
        let g = g?;
        let field = FieldSpec::for_group(q, &g)?;
        let (_, codes) = all_minimal_codes(&g, &field, common.exec)?;
        let rows = codes
            .iter()
            .map(|c| {
                let weights = if weights { Some(weight_distribution_with(c, common.exec)?.into_iter().collect()) } else { None };
                Ok(CodeRow {
                    representative: c.class.representative().clone(),
                    class_size: c.class.size(),
                    kernel_type: c.class.kernel.iso_type().to_string(),
                    dimension: c.dimension,
                    weights,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let orbits = if orbits {
            let equiv = code_equivalence_classes(&g, &field)?;
            let eta = eta_with(&g, &common.opts())?.value;
            Some(OrbitOutcome { count: equiv.count, eta, agreement: equiv.count as u64 == eta, orbits: equiv.orbits })
        } else {
            None
        };
        Ok(Payload::Codes(CodesOutcome {
            group: g.to_string(),
            q,
            extension_degree: field.degree,
            modulus: field.modulus.clone(),
            codes: rows,
            orbits,
        }))
    };
    (input, run())
}
