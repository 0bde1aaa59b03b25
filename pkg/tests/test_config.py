"""JSON config loading and validation for every model block."""

import json

import pytest

from lexsim import (
    AreaKind,
    ConfigError,
    FeeRule,
    load_config,
)

CONFIG_DIR = "configs"


def write(tmp_path, payload) -> str:
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(payload) if not isinstance(payload, str) else payload)
    return str(path)


def equilibrium_block(**overrides):
    curve = {"b_scale": 1.0, "beta": 1.0, "k_scale": 1.0, "kappa": 1.0}
    block = {"curve": curve, "tolerance": 1e-9}
    block.update(overrides)
    return {"equilibrium": block}


def settle_block(**dispute_overrides):
    d = {"p_q": 0.6, "p_g": 0.5, "j": 100.0, "c_q": 10.0, "c_g": 10.0}
    d.update(dispute_overrides)
    return {"settle": {"rule": "american", "disputes": [d], "cost_reduction": 0.0}}


def evolve_block(**overrides):
    block = {
        "area": {
            "name": "negligence", "kind": "tort", "dispute_rate": 0.8,
            "stakes_j": 100.0, "stakes_multiplier": 2.0, "cost_q": 18.0,
            "cost_g": 18.0, "belief_spread": 0.4, "overturn_prob": 0.5,
        },
        "population": {"n_rules": 100, "fraction_efficient": 0.5},
        "periods": 50,
    }
    block.update(overrides)
    return {"evolve": block}


class TestShippedFixtures:
    def test_golden_equilibrium_fixture(self):
        cfg = load_config(f"{CONFIG_DIR}/equilibrium_golden.json", "equilibrium")
        assert cfg.model == "equilibrium"
        assert cfg.seed == 0
        curve = cfg.params.curve
        assert (curve.b_scale, curve.beta, curve.k_scale, curve.kappa) == (1.0, 1.0, 1.0, 1.0)
        assert cfg.params.tolerance == 1e-9

    def test_every_shipped_fixture_loads(self):
        for name, model in [
            ("equilibrium_golden", "equilibrium"),
            ("equilibrium_shock", "equilibrium"),
            ("settle_fixture", "settle"),
            ("frivolous_nuisance", "frivolous"),
            ("evolve_tort", "evolve"),
            ("composition_docket", "composition"),
            ("sweep_litigation_delta", "sweep"),
        ]:
            cfg = load_config(f"{CONFIG_DIR}/{name}.json", model)
            assert cfg.model == model

    def test_evolve_fixture_details(self):
        cfg = load_config(f"{CONFIG_DIR}/evolve_tort.json", "evolve")
        assert cfg.seed == 7
        assert cfg.params.area.kind is AreaKind.TORT
        assert cfg.params.area.fee_rule is FeeRule.AMERICAN
        assert cfg.params.population.n_rules == 2000
        assert cfg.params.periods == 200


class TestLoadFailures:
    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(str(tmp_path / "absent.json"), "equilibrium")

    def test_invalid_json(self, tmp_path):
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, "{not json"), "equilibrium")
        assert "JSON" in str(exc.value) or "json" in str(exc.value)

    def test_top_level_must_be_object(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(write(tmp_path, [1, 2, 3]), "equilibrium")

    def test_unknown_model_name(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(write(tmp_path, equilibrium_block()), "arbitrage")

    def test_missing_model_block(self, tmp_path):
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, equilibrium_block()), "settle")
        assert "settle" in str(exc.value)

    def test_unknown_top_level_key(self, tmp_path):
        payload = equilibrium_block()
        payload["stray"] = 1
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "equilibrium")
        assert "stray" in str(exc.value)

    def test_unknown_nested_key(self, tmp_path):
        payload = equilibrium_block()
        payload["equilibrium"]["curve"]["gamma"] = 2.0
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "equilibrium")
        assert "equilibrium.curve" in str(exc.value) and "gamma" in str(exc.value)


class TestFieldErrors:
    def test_error_names_the_dotted_path(self, tmp_path):
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, settle_block(p_q=1.5)), "settle")
        assert "settle.disputes[0].p_q" in str(exc.value)

    def test_multiple_violations_aggregate(self, tmp_path):
        payload = settle_block(p_q=1.5, j=-3.0)
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "settle")
        msg = str(exc.value)
        assert "settle.disputes[0].p_q" in msg
        assert "settle.disputes[0].j" in msg
        assert len(exc.value.errors) >= 2

    def test_type_errors_reported(self, tmp_path):
        payload = equilibrium_block()
        payload["equilibrium"]["curve"]["beta"] = "steep"
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "equilibrium")
        assert "equilibrium.curve.beta" in str(exc.value)

    def test_bool_is_not_a_number(self, tmp_path):
        payload = equilibrium_block()
        payload["equilibrium"]["curve"]["beta"] = True
        with pytest.raises(ConfigError):
            load_config(write(tmp_path, payload), "equilibrium")

    def test_seed_bounds(self, tmp_path):
        payload = equilibrium_block()
        payload["seed"] = 2**64
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "equilibrium")
        assert "seed" in str(exc.value)
        payload["seed"] = 2**64 - 1
        assert load_config(write(tmp_path, payload), "equilibrium").seed == 2**64 - 1

    def test_rule_choices(self, tmp_path):
        payload = settle_block()
        payload["settle"]["rule"] = "loser-pays"
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "settle")
        assert "settle.rule" in str(exc.value)


class TestCrossChecks:
    def test_settle_reduction_capped_by_fixture_costs(self, tmp_path):
        payload = settle_block()
        payload["settle"]["cost_reduction"] = 11.0
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "settle")
        assert "cost_reduction" in str(exc.value)

    def test_frivolous_shift_deltas_bounded(self, tmp_path):
        payload = {
            "frivolous": {
                "game": {"f_o": 1.0, "f_q": 1.0, "d": 10.0, "s": 5.0,
                         "j": 100.0, "c_p": 10.0},
                "shift": {"delta_f": 2.0, "delta_d": 0.0},
            }
        }
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "frivolous")
        assert "delta_f" in str(exc.value)

    def test_evolve_tort_rejects_gap_curve(self, tmp_path):
        payload = evolve_block()
        payload["evolve"]["area"]["gap_curve"] = {
            "b_scale": 1.0, "beta": 1.0, "k_scale": 1.0, "kappa": 1.0}
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "evolve")
        assert "gap_curve" in str(exc.value) or "tort" in str(exc.value)

    def test_evolve_contract_requires_gap_curve(self, tmp_path):
        payload = evolve_block()
        payload["evolve"]["area"]["kind"] = "contract"
        with pytest.raises(ConfigError):
            load_config(write(tmp_path, payload), "evolve")

    def test_evolve_cost_delta_cross_check(self, tmp_path):
        payload = evolve_block(cost_delta=18.5)
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "evolve")
        assert "cost_delta" in str(exc.value)


class TestEvolveRoundTrip:
    def test_full_block_with_frivolous_stream(self, tmp_path):
        payload = evolve_block(
            frivolous={
                "game": {"f_o": 1.0, "f_q": 1.0, "d": 10.0, "s": 5.0,
                         "j": 100.0, "c_p": 10.0},
                "filers_per_period": 3,
            },
            shock={"delta_contracting": 0.0, "delta_litigation": 0.1},
            cost_delta=5.0,
        )
        cfg = load_config(write(tmp_path, payload), "evolve")
        assert cfg.params.frivolous.filers_per_period == 3
        assert cfg.params.shock.delta_litigation == 0.1
        assert cfg.params.cost_delta == 5.0

    def test_integer_fields_reject_fractions(self, tmp_path):
        payload = evolve_block(periods=2.5)
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "evolve")
        assert "periods" in str(exc.value)


class TestSweep:
    def base(self):
        payload = equilibrium_block()
        payload["sweep"] = {
            "model": "equilibrium",
            "axes": [{"path": "equilibrium.curve.kappa", "values": [0.5, 1.0, 2.0]}],
            "replicates": 1,
        }
        return payload

    def test_valid_sweep_loads(self, tmp_path):
        cfg = load_config(write(tmp_path, self.base()), "sweep")
        assert cfg.params.model == "equilibrium"
        assert cfg.params.axes[0] == ("equilibrium.curve.kappa", [0.5, 1.0, 2.0])

    def test_swept_model_block_must_exist(self, tmp_path):
        payload = self.base()
        del payload["equilibrium"]
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "sweep")
        assert "equilibrium" in str(exc.value)

    def test_axis_path_must_start_with_swept_model(self, tmp_path):
        payload = self.base()
        payload["sweep"]["axes"][0]["path"] = "settle.cost_reduction"
        with pytest.raises(ConfigError) as exc:
            load_config(write(tmp_path, payload), "sweep")
        assert "path" in str(exc.value)

    def test_axis_path_needs_two_segments(self, tmp_path):
        payload = self.base()
        payload["sweep"]["axes"][0]["path"] = "equilibrium"
        with pytest.raises(ConfigError):
            load_config(write(tmp_path, payload), "sweep")

    def test_axis_values_must_be_nonempty(self, tmp_path):
        payload = self.base()
        payload["sweep"]["axes"][0]["values"] = []
        with pytest.raises(ConfigError):
            load_config(write(tmp_path, payload), "sweep")

    def test_replicates_positive_integer(self, tmp_path):
        payload = self.base()
        payload["sweep"]["replicates"] = 0
        with pytest.raises(ConfigError):
            load_config(write(tmp_path, payload), "sweep")
