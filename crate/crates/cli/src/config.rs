//! JSON system descriptions with exact rational fields.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use ssvis_core::{AngleValue, Generator, Ifs, Limits, Orientation, Rational, Similitude};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

impl Frac {
    fn to_rational(self, path: &str) -> Result<Rational, CliError> {
        if self.den == 0 {
            return Err(CliError::Config(format!("{path}: zero denominator")));
        }
        Ok(Rational::new(BigInt::from(self.num), BigInt::from(self.den)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AngleConfig {
    RationalPi { num: i64, den: i64 },
    Generator { label: String, approx_radians: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Translation {
    pub x: Frac,
    pub y: Frac,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapConfig {
    pub ratio: Frac,
    pub angle: AngleConfig,
    #[serde(default)]
    pub reflection: bool,
    pub translation: Translation,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Assertions {
    #[serde(default)]
    pub open_set_condition: bool,
    #[serde(default)]
    pub not_on_line: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Budgets {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_cylinders: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_depth: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IfsConfig {
    pub maps: Vec<MapConfig>,
    #[serde(default)]
    pub assertions: Assertions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budgets: Option<Budgets>,
}

impl IfsConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            CliError::Config(format!("line {} column {}, at `{}`: {}", inner.line(), inner.column(), path, inner))
        })
    }

    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("config serializes");
        s.push('\n');
        s
    }

    pub fn to_ifs(&self) -> Result<Ifs, CliError> {
        let mut generators: HashMap<&str, Arc<Generator>> = HashMap::new();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (k, m) in self.maps.iter().enumerate() {
            let at = |field: &str| format!("maps[{k}].{field}");
            let angle = match &m.angle {
                AngleConfig::RationalPi { num, den } => {
                    if *den == 0 {
                        return Err(CliError::Config(format!("{}: zero denominator", at("angle"))));
                    }
                    AngleValue::rational_pi(*num, *den)
                }
                AngleConfig::Generator { label, approx_radians } => {
                    if !approx_radians.is_finite() {
                        return Err(CliError::Config(format!("{}: approximation must be finite", at("angle"))));
                    }
                    let g = generators
                        .entry(label.as_str())
                        .or_insert_with(|| Generator::new(label.as_str(), *approx_radians));
                    if g.approx() != *approx_radians {
                        return Err(CliError::Config(format!(
                            "{}: generator `{label}` redeclared with approximation {approx_radians} (was {})",
                            at("angle"),
                            g.approx()
                        )));
                    }
                    AngleValue::generator(g.clone())
                }
            };
            let ratio = m.ratio.to_rational(&at("ratio"))?;
            let translation = [
                m.translation.x.to_rational(&at("translation.x"))?,
                m.translation.y.to_rational(&at("translation.y"))?,
            ];
            let s = Similitude::new(ratio, angle, Orientation::from_reflection(m.reflection), translation)
                .map_err(|e| CliError::Config(format!("{}: {e}", at("ratio"))))?;
            maps.push(s);
        }
        let mut ifs = Ifs::new(maps)
            .map_err(|e| CliError::Config(e.to_string()))?
            .with_assertions(self.assertions.open_set_condition, self.assertions.not_on_line);
        if let Some(b) = self.budgets {
            let d = Limits::default();
            ifs = ifs.with_limits(Limits {
                max_cylinders: b.max_cylinders.unwrap_or(d.max_cylinders),
                max_depth: b.max_depth.unwrap_or(d.max_depth),
            });
        }
        Ok(ifs)
    }

    pub fn four_corner() -> Self {
        let f = |num, den| Frac { num, den };
        let corner = |x, y| MapConfig {
            ratio: f(1, 4),
            angle: AngleConfig::RationalPi { num: 0, den: 1 },
            reflection: false,
            translation: Translation { x: f(x, 4), y: f(y, 4) },
        };
        IfsConfig {
            maps: vec![corner(0, 0), corner(3, 0), corner(0, 3), corner(3, 3)],
            assertions: Assertions { open_set_condition: true, not_on_line: true },
            budgets: None,
        }
    }
}

pub fn parse_config(text: &str) -> Result<Ifs, CliError> {
    IfsConfig::parse(text)?.to_ifs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ssvis_core::rational;

    #[test]
    fn four_corner_round_trip() {
        let cfg = IfsConfig::four_corner();
        let text = cfg.emit();
        let again = IfsConfig::parse(&text).unwrap();
        assert_eq!(cfg, again);
        assert_eq!(again.emit(), text);
        let ifs = again.to_ifs().unwrap();
        assert_eq!(ifs.len(), 4);
        assert!(ifs.is_one_set());
        assert_eq!(ifs.maps(), Ifs::four_corner().maps());
    }

    #[test]
    fn ratio_out_of_range() {
        let mut cfg = IfsConfig::four_corner();
        cfg.maps[1].ratio = Frac { num: 5, den: 4 };
        let err = cfg.to_ifs().unwrap_err().to_string();
        assert!(err.contains("maps[1].ratio"), "{err}");
    }

    #[test]
    fn conflicting_generators() {
        let mut cfg = IfsConfig::four_corner();
        cfg.maps[0].angle = AngleConfig::Generator { label: "a".into(), approx_radians: 1.0 };
        cfg.maps[2].angle = AngleConfig::Generator { label: "a".into(), approx_radians: 1.5 };
        let err = cfg.to_ifs().unwrap_err().to_string();
        assert!(err.contains("maps[2].angle"), "{err}");
        cfg.maps[2].angle = AngleConfig::Generator { label: "a".into(), approx_radians: 1.0 };
        let ifs = cfg.to_ifs().unwrap();
        assert_eq!(ifs.map(0).angle, ifs.map(2).angle);
    }

    #[test]
    fn decimals_are_rejected() {
        let text = IfsConfig::four_corner().emit().replacen("\"num\": 1,", "\"num\": 0.25,", 1);
        let err = IfsConfig::parse(&text).unwrap_err().to_string();
        assert!(err.contains("maps[0].ratio.num"), "{err}");
        assert!(err.contains("line"), "{err}");
    }

    #[test]
    fn budgets_apply() {
        let mut cfg = IfsConfig::four_corner();
        cfg.budgets = Some(Budgets { max_cylinders: Some(99), max_depth: None });
        let ifs = cfg.to_ifs().unwrap();
        assert_eq!(ifs.limits().max_cylinders, 99);
        let text = cfg.emit();
        assert_eq!(IfsConfig::parse(&text).unwrap(), cfg);
        assert_eq!(ifs.map(3).translation, [rational(3, 4), rational(3, 4)]);
    }
}
