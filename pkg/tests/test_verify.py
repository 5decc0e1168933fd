import json

import pytest

from ladderlab import setlang as sl
from ladderlab.constructions import adversarial_certificate
from ladderlab.core import APWitness, Certificate, Coloring, CubeWitness, WalkWitness, modular_coloring
from ladderlab.errors import MalformedCertificate, ParseError
from ladderlab.ramsey import vdw_threshold
from ladderlab.setlang import materialize
from ladderlab.verify import verify_certificate


def test_parity_no_mono_ap_passes():
    cert = Certificate("no-mono-ap", "odds", 20, 2, 2, coloring=modular_coloring(2, 20))
    assert verify_certificate(cert).ok


def test_no_mono_ap_false_claim_fails():
    cert = Certificate("no-mono-ap", "evens", 20, 2, 2, coloring=modular_coloring(2, 20))
    report = verify_certificate(cert)
    assert not report.ok and report.position == 1


def test_wrong_color_witness_fails_with_position():
    coloring = Coloring([0, 0, 0, 1, 0, 0], 2)
    cert = Certificate("witness-found", "all", 6, 2, 3, coloring=coloring, witness=APWitness(2, 1, 3, 0))
    report = verify_certificate(cert)
    assert not report.ok and report.position == 4
    good = Certificate("witness-found", "all", 6, 2, 3, coloring=coloring, witness=APWitness(1, 1, 3, 0))
    assert verify_certificate(good).ok


def test_threshold_certificate_passes_with_enumeration():
    cert = vdw_threshold("all", 3, 2, 20).to_certificate()
    report = verify_certificate(cert.dumps())
    assert report.ok and report.checks == ["avoidance", "exhaustion-enumeration"]


def test_threshold_certificate_replay_path():
    cert = vdw_threshold("all", 3, 2, 20).to_certificate()
    report = verify_certificate(cert, enumeration_limit=10)
    assert report.ok and "exhaustion-engine-replay" in report.checks


def test_threshold_too_small_fails():
    obj = vdw_threshold("all", 3, 2, 20).to_certificate().to_json()
    obj["N"], obj["coloring"] = 8, obj["coloring"][:7]
    assert not verify_certificate(obj).ok


def test_threshold_bad_avoider_fails():
    obj = vdw_threshold("all", 3, 2, 20).to_certificate().to_json()
    obj["coloring"] = [0] * 8
    report = verify_certificate(obj)
    assert not report.ok and "contains the target" in report.discrepancy


def test_walk_and_cube_witnesses():
    walk = Certificate("witness-found", "squares", 10, 1, 2, coloring=Coloring([0] * 10, 1),
                       witness=WalkWitness((1, 5, 9), 0))
    assert verify_certificate(walk).ok
    broken = Certificate("witness-found", "squares", 10, 1, 2, coloring=Coloring([0] * 10, 1),
                         witness=WalkWitness((1, 3, 7), 0))
    report = verify_certificate(broken)
    assert not report.ok and report.position == 3
    cube = Certificate("witness-found", "squares", 100, 0, 2, witness=CubeWitness((9, 16)))
    assert verify_certificate(cube).ok
    bad = Certificate("witness-found", "squares", 100, 0, 2, witness=CubeWitness((4, 9)))
    assert not verify_certificate(bad).ok


def test_subset_ap_x_expr():
    cert = Certificate("witness-found", "all", 49, 0, 3, witness=APWitness(1, 24, 3),
                       extra={"x_expr": "squares"})
    assert verify_certificate(cert).ok
    cert = Certificate("witness-found", "all", 49, 0, 3, witness=APWitness(1, 23, 3),
                       extra={"x_expr": "squares"})
    assert not verify_certificate(cert).ok


def test_tampered_partition_fails():
    cert, _ = adversarial_certificate(materialize(sl.Squares(), 1000), 1)
    obj = cert.to_json()
    x = obj["partition"][4]["start"]
    obj["coloring"][x - 1] = obj["partition"][4]["forbidden"]
    report = verify_certificate(obj)
    assert not report.ok and report.position == x


def test_malformed_and_bad_expr():
    with pytest.raises(MalformedCertificate):
        verify_certificate("{}")
    obj = Certificate("no-mono-ap", "odds", 4, 2, 2, coloring=modular_coloring(2, 4)).to_json()
    obj["expr"] = "union(odds"
    with pytest.raises(ParseError):
        verify_certificate(json.dumps(obj))
