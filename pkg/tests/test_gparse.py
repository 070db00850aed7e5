import json
import random

import pytest

from conftest import GOLDEN_DIR, LOG_DIR
from gausseer.errors import EmptyInput, MalformedRoute, NoRouteSection
from gausseer.gparse import (
    FLAG_TRIGGERS,
    canonical_json,
    extract_elements,
    parse_document,
    parse_route,
    record_from_dict,
    record_to_dict,
)
from gausseer.synth import synth_case

GOLDEN_NAMES = sorted(p.stem for p in GOLDEN_DIR.glob("*.json"))


def _fixture_text(name: str) -> str:
    return (LOG_DIR / f"{name}.log").read_text(encoding="utf-8")


@pytest.mark.parametrize("name", GOLDEN_NAMES)
def test_fixture_matches_golden_bytes(name):
    """Canonical serialization of each parse equals the checked-in golden."""
    record = parse_document(_fixture_text(name), f"{name}.log")
    golden = (GOLDEN_DIR / f"{name}.json").read_text(encoding="utf-8")
    assert canonical_json(record) == golden


@pytest.mark.parametrize("name", GOLDEN_NAMES)
def test_record_dict_roundtrip(name):
    record = parse_document(_fixture_text(name), f"{name}.log")
    assert record_from_dict(json.loads(canonical_json(record))) == record
    assert record_from_dict(record_to_dict(record)) == record


def test_empty_input():
    with pytest.raises(EmptyInput):
        parse_document("", "x.log")
    with pytest.raises(EmptyInput):
        parse_document("   \n \n", "x.log")


def test_no_route_section():
    with pytest.raises(NoRouteSection):
        parse_document(_fixture_text("malformed"), "malformed.log")


def test_parse_route_examples(taxonomy):
    m, b, j = parse_route("# b3lyp/6-31g(d) opt freq", taxonomy)
    assert (m, b, j) == ({"b3lyp"}, {"6-31g(d)"}, {"opt", "freq"})
    m, b, j = parse_route("#p hf/gen scrf", taxonomy)
    assert (m, b, j) == ({"hf"}, {"gen"}, {"scrf"})
    m, b, j = parse_route("# mp2/6-311+g(2d,p)", taxonomy)
    assert (m, b, j) == ({"mp2"}, {"6-311+g(2d,p)"}, {"sp"})


def test_parse_route_details(taxonomy):
    # second "/" segment joins methods; options ride along on job tokens
    m, b, j = parse_route("# b3lyp/6-31g/amber oniom", taxonomy)
    assert m == {"b3lyp", "amber"}
    assert b == {"6-31g"}
    assert j == {"oniom"}
    _, _, j = parse_route("# hf/sto-3g opt(ts,calcfc)", taxonomy)
    assert j == {"opt(ts,calcfc)"}
    # unmatched bare tokens are dropped, case is folded
    m, b, j = parse_route("#P B3LYP/6-31G(D) OPT NOSYMM", taxonomy)
    assert (m, b, j) == ({"b3lyp"}, {"6-31g(d)"}, {"opt"})
    # a bare method is only kept when the taxonomy knows it
    m, _, _ = parse_route("# qcisd(t) nonsense-token", taxonomy)
    assert m == {"qcisd(t)"}


def test_parse_route_rejects_missing_hash(taxonomy):
    with pytest.raises(MalformedRoute):
        parse_route("b3lyp/6-31g opt", taxonomy)


def test_print_level_letter_only_stripped_when_isolated(taxonomy):
    # "#p" is a print level; "#nmr..." must not lose its leading n
    _, _, j = parse_route("# nmr", taxonomy)
    assert j == {"nmr"}
    _, _, j = parse_route("#nmr", taxonomy)
    assert j == {"nmr"}


def test_extract_elements_last_block_wins():
    text = _fixture_text("freq_thermo")
    sites = extract_elements(text)
    assert [s[0] for s in sites] == ["C", "O", "H", "H"]
    assert sites[0][3] == 0.5268  # from the second block, not the first


def test_extract_elements_prefers_standard_over_input():
    text = _fixture_text("uhf_radical")
    assert [s[0] for s in extract_elements(text)] == ["O", "H"]
    assert extract_elements("no blocks here at all") == ()


def test_extract_elements_skips_out_of_range_z():
    text = (
        "                         Standard orientation:\n"
        " ----\n"
        " header\n"
        " header\n"
        " ----\n"
        "      1        999           0        0.000000    0.000000    0.000000\n"
        "      2          6           0        1.000000    0.000000    0.000000\n"
        " ----\n"
    )
    assert [s[0] for s in extract_elements(text)] == ["C"]


def test_title_card_and_fallback():
    record = parse_document(_fixture_text("h2o_opt"), "h2o_opt.log")
    assert record.title == "water optimization"
    # no charge line means no title region, so the stem is used
    record = parse_document(_fixture_text("no_charge"), "no_charge.log")
    assert record.title == "no_charge"
    text = " # hf/gen\n\n Charge = 0 Multiplicity = 1\n"
    assert parse_document(text, "runs/job42.log").title == "job42"


def test_flag_triggers_found_individually(taxonomy):
    base = " # hf/gen\n\n Charge = 0 Multiplicity = 1\n\n{}\n"
    for trigger, flag in FLAG_TRIGGERS:
        record = parse_document(base.format(trigger), "t.log", taxonomy)
        assert flag in record.flags, flag
    clean = parse_document(base.format("nothing to see"), "t.log", taxonomy)
    assert clean.flags == frozenset()


def test_missing_bookkeeping():
    record = parse_document(_fixture_text("anomalous"), "anomalous.log")
    assert record.atom_sites == ()
    assert "input_orientation" in record.missing
    assert "energy" not in record.missing
    record = parse_document(_fixture_text("no_charge"), "no_charge.log")
    assert record.missing == {"charge", "multiplicity", "degrees_of_freedom"}
    # an input-orientation block satisfies the orientation attribute
    assert "input_orientation" in record.flags


def test_zero_multiplicity_treated_as_missing():
    text = " # hf/gen\n\n Charge =  0 Multiplicity = 0\n"
    record = parse_document(text, "t.log")
    assert record.charge == 0
    assert record.multiplicity is None
    assert "multiplicity" in record.missing


def test_last_scf_energy_wins_and_d_exponent():
    record = parse_document(_fixture_text("irc_path"), "irc_path.log")
    assert record.energy == -100.4287346
    record = parse_document(_fixture_text("nmr_shield"), "nmr_shield.log")
    assert record.energy == -40.21431


def test_parse_is_deterministic():
    text = _fixture_text("freq_thermo")
    assert parse_document(text, "a.log") == parse_document(text, "a.log")


def test_elements_equal_site_symbols_on_random_docs(taxonomy):
    rng = random.Random(97)
    for i in range(50):
        case = synth_case(rng, path=f"inv_{i}.log")
        record = parse_document(case.text, f"inv_{i}.log", taxonomy)
        if record.atom_sites:
            assert record.elements == {s for s, _, _, _ in record.atom_sites}
        populated = {
            name
            for name in ("charge", "multiplicity", "energy", "degrees_of_freedom")
            if getattr(record, name) is not None
        }
        if record.atom_sites or "input_orientation" in record.flags:
            populated.add("input_orientation")
        assert not (record.missing & populated)


def test_synth_roundtrip_sample(taxonomy):
    rng = random.Random(1311)
    for i in range(60):
        case = synth_case(rng, path=f"rt_{i}.log")
        assert parse_document(case.text, f"rt_{i}.log", taxonomy) == case.record
