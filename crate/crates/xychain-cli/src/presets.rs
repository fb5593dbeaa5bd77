//! Named sweep presets reproducing the shipped figure datasets.
//!
//! All presets share the same frame: a 101-site ring at full anisotropy,
//! scanning the reduced coupling from 0 to 4 in steps of 0.02, three curves
//! per panel. The `fig1*`/`fig2*` family watches the bond just left of the
//! impurity center, pair (49, 50); `fig3*`/`fig4*` watch the bond under the
//! center, pair (50, 51). Panels `a`-`d` move the impurity through its
//! shapes: single Gaussian, double Gaussian (varied second strength), double
//! Gaussian (varied width), and the bimodal narrow-spike limit. The `fig1`/
//! `fig3` panels perturb the couplings (zeta), `fig2`/`fig4` the fields (xi).

use crate::sweep::{parse_lambda_grid, SweepConfig, VaryParam};
use xychain::{Boundary, ChainSpec, ProfileParams};

pub const PRESET_NAMES: [&str; 16] = [
    "fig1a", "fig1b", "fig1c", "fig1d", "fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b",
    "fig3c", "fig3d", "fig4a", "fig4b", "fig4c", "fig4d",
];

/// Default output filename for a preset.
pub fn default_output_name(name: &str) -> String {
    format!("{name}.csv")
}

fn frame() -> ChainSpec {
    ChainSpec::pure(101, 1.0, 0.0, Boundary::Periodic)
}

fn grid() -> Vec<f64> {
    parse_lambda_grid("0:4:0.02").expect("default grid is well-formed")
}

fn build(
    on_fields: bool,
    profile: ProfileParams,
    vary: VaryParam,
    values: Vec<f64>,
    pair: (usize, usize),
) -> SweepConfig {
    let mut base = frame();
    if on_fields {
        base.beta = profile;
    } else {
        base.alpha = profile;
    }
    SweepConfig {
        base,
        lambda_grid: grid(),
        vary,
        vary_values: values,
        pairs: vec![pair],
    }
}

fn panel(letter: char, on_fields: bool, pair: (usize, usize)) -> SweepConfig {
    let (vary_all, vary_second) = if on_fields {
        (VaryParam::XiAll, VaryParam::Xi2)
    } else {
        (VaryParam::ZetaAll, VaryParam::Zeta2)
    };
    // Field impurities act on a larger natural scale than coupling ones
    // (a unit field bump doubles the local field), hence the wider lists.
    let strong = if on_fields {
        vec![0.3, 1.0, 10.0]
    } else {
        vec![0.3, 0.6, 1.0]
    };
    match letter {
        // Single Gaussian bump, all strengths varied together.
        'a' => {
            let values = if on_fields {
                vec![0.0, 1.0, 10.0]
            } else {
                vec![0.0, 0.5, 1.0]
            };
            build(on_fields, ProfileParams::gaussian(0.0), vary_all, values, pair)
        }
        // Twin Gaussians: first fixed at 0.5, second swept.
        'b' => build(
            on_fields,
            ProfileParams::double_gaussian(0.5, 0.3),
            vary_second,
            strong,
            pair,
        ),
        // Twin Gaussians of equal strength, width swept toward the
        // bimodal limit.
        'c' => build(
            on_fields,
            ProfileParams::double_gaussian(0.5, 0.5),
            VaryParam::Epsilon,
            vec![0.5, 2.0, 5.0],
            pair,
        ),
        // Bimodal spikes: first fixed at 0.5, second swept.
        'd' => build(
            on_fields,
            ProfileParams::bimodal(0.5, 0.3),
            vary_second,
            strong,
            pair,
        ),
        other => unreachable!("unknown panel letter {other}"),
    }
}

/// Resolve a preset name into its full sweep description.
pub fn preset_config(name: &str) -> Option<SweepConfig> {
    let mut chars = name.chars();
    if chars.next() != Some('f') || chars.next() != Some('i') || chars.next() != Some('g') {
        return None;
    }
    let family = chars.next()?;
    let letter = chars.next()?;
    if chars.next().is_some() || !matches!(letter, 'a'..='d') {
        return None;
    }
    let (on_fields, pair) = match family {
        '1' => (false, (49, 50)),
        '2' => (true, (49, 50)),
        '3' => (false, (50, 51)),
        '4' => (true, (50, 51)),
        _ => return None,
    };
    Some(panel(letter, on_fields, pair))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::run_sweep;

    #[test]
    fn every_name_resolves_and_nothing_else_does() {
        for name in PRESET_NAMES {
            assert!(preset_config(name).is_some(), "{name} should resolve");
        }
        for bad in ["fig5a", "fig1e", "fig1", "fig1aa", "1a", "FIG1A", ""] {
            assert!(preset_config(bad).is_none(), "{bad:?} should not resolve");
        }
    }

    #[test]
    fn presets_share_the_common_frame() {
        for name in PRESET_NAMES {
            let config = preset_config(name).unwrap();
            assert_eq!(config.base.n_sites, 101, "{name}");
            assert_eq!(config.base.gamma, 1.0, "{name}");
            assert_eq!(config.base.boundary, Boundary::Periodic, "{name}");
            assert_eq!(config.lambda_grid.len(), 201, "{name}");
            assert_eq!(config.vary_values.len(), 3, "{name}");
            let expected_pair = if name.starts_with("fig1") || name.starts_with("fig2") {
                (49, 50)
            } else {
                (50, 51)
            };
            assert_eq!(config.pairs, vec![expected_pair], "{name}");
        }
    }

    #[test]
    fn coupling_and_field_families_target_their_own_profile() {
        let coupling = preset_config("fig1b").unwrap();
        assert_eq!(coupling.base.alpha.strength_1, 0.5);
        assert_eq!(coupling.base.beta.strength_1, 0.0);
        assert_eq!(coupling.vary, VaryParam::Zeta2);

        let field = preset_config("fig4b").unwrap();
        assert_eq!(field.base.beta.strength_1, 0.5);
        assert_eq!(field.base.alpha.strength_1, 0.0);
        assert_eq!(field.vary, VaryParam::Xi2);

        assert_eq!(preset_config("fig2c").unwrap().vary, VaryParam::Epsilon);
        assert_eq!(preset_config("fig3a").unwrap().vary, VaryParam::ZetaAll);
    }

    #[test]
    fn width_presets_start_from_the_narrow_double_gaussian() {
        let c = preset_config("fig1c").unwrap();
        assert_eq!(c.base.alpha.width, 0.1);
        assert_eq!(c.vary_values, vec![0.5, 2.0, 5.0]);
        let d = preset_config("fig1d").unwrap();
        assert_eq!(d.base.alpha.width, 10.0);
    }

    #[test]
    fn every_preset_solves_at_a_probe_point() {
        // One grid point at the strongest vary value exercises profile
        // validity (1 + alpha > 0) and the solver for each preset.
        for name in PRESET_NAMES {
            let mut config = preset_config(name).unwrap();
            config.lambda_grid = vec![0.8];
            let strongest = *config
                .vary_values
                .last()
                .expect("presets always vary something");
            config.vary_values = vec![strongest];
            let rows = run_sweep(&config).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(rows.len(), 1, "{name}");
            assert!(rows[0].concurrence.is_finite(), "{name}");
        }
    }
}
