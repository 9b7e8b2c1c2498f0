import math

import pytest

from angledev.certificates import (Certificate, CertEntry, certificate_from_dict,
                                   certificate_to_dict, generate_certificate,
                                   load_certificate, record_certificate_10,
                                   render_certificate_table, save_certificate,
                                   verify_certificate)
from angledev.constructions import circle_points, record_config_10
from angledev.errors import ShapeError
from angledev.geometry import Configuration
from angledev.scoring import gamma
from conftest import random_config

SQUARE = Configuration([(0, 0), (1, 0), (1, 1), (0, 1)])


def tampered(cert: Certificate, **changes) -> Certificate:
    entries = list(cert.entries)
    idx = changes.pop("entry", 0)
    e = entries[idx]
    entries[idx] = CertEntry(
        a=changes.get("a", e.a), b=changes.get("b", e.b), c=changes.get("c", e.c),
        deviation_deg=changes.get("deviation_deg", e.deviation_deg),
        completions=changes.get("completions", e.completions))
    return Certificate(n=cert.n, k=cert.k, bound_deg=changes.get("bound_deg", cert.bound_deg),
                       entries=tuple(entries))


class TestGenerate:
    def test_square_single_entry(self):
        cert = generate_certificate(SQUARE, 4)
        assert len(cert.entries) == 1
        assert cert.bound_deg == 0.0
        e = cert.entries[0]
        assert (e.b, e.a, e.c) == (0, 1, 3)
        assert e.completions == ((2,),)

    def test_record_10(self):
        cert = generate_certificate(record_config_10(), 4)
        covered = sum(len(e.completions) for e in cert.entries)
        assert covered == math.comb(10, 4)
        assert cert.bound_deg == pytest.approx(9.2919, abs=5e-4)
        devs = [e.deviation_deg for e in cert.entries]
        assert devs == sorted(devs)

    def test_hexagon_k3(self):
        cert = generate_certificate(circle_points(6), 3)
        assert sum(len(e.completions) for e in cert.entries) == math.comb(6, 3)
        assert cert.bound_deg == pytest.approx(30.0, abs=1e-9)
        report = verify_certificate(circle_points(6), cert, tol_deg=1e-9)
        assert report.passed

    def test_self_consistency_sweep(self, rng):
        for _ in range(50):
            n = int(rng.integers(5, 9))
            k = int(rng.choice([3, 4]))
            config = random_config(rng, n)
            cert = generate_certificate(config, k)
            report = verify_certificate(config, cert, tol_deg=1e-9)
            assert report.passed, report.message
            assert cert.bound_deg == gamma(config, k).gamma_deg


class TestVerify:
    def test_builtin_table_passes(self):
        report = verify_certificate(record_config_10(), record_certificate_10(),
                                    tol_deg=5e-4)
        assert report.passed
        assert report.subsets_checked == 210

    def test_detects_altered_deviation(self):
        cert = tampered(record_certificate_10(), deviation_deg=0.0126 + 0.01)
        report = verify_certificate(record_config_10(), cert, tol_deg=5e-4)
        assert not report.passed
        assert report.failed_check == 1

    def test_detects_missing_fourth_point(self):
        cert = record_certificate_10()
        e0 = cert.entries[0]
        cert = tampered(cert, completions=e0.completions[1:])
        report = verify_certificate(record_config_10(), cert, tol_deg=5e-4)
        assert not report.passed
        assert report.failed_check == 2
        dropped = tuple(sorted({e0.a, e0.b, e0.c} | set(e0.completions[0])))
        assert str(dropped) in report.message

    def test_detects_double_cover(self):
        cert = record_certificate_10()
        e0 = cert.entries[0]
        cert = tampered(cert, completions=e0.completions + (e0.completions[0],))
        report = verify_certificate(record_config_10(), cert, tol_deg=5e-4)
        assert not report.passed
        assert report.failed_check == 2

    def test_detects_non_argmin_angle(self):
        # move a quadruple from its argmin entry to some other entry: cover
        # still exact, but the listed angle no longer attains the minimum
        cert = record_certificate_10()
        e0, e1 = cert.entries[0], cert.entries[1]
        # the moved quadruple must stay a valid 4-subset around e1's triple
        moved = next(r for r in e0.completions
                     if not set(r) & {e1.a, e1.b, e1.c})
        entries = list(cert.entries)
        entries[0] = CertEntry(a=e0.a, b=e0.b, c=e0.c, deviation_deg=e0.deviation_deg,
                               completions=tuple(r for r in e0.completions if r != moved))
        entries[1] = CertEntry(a=e1.a, b=e1.b, c=e1.c, deviation_deg=e1.deviation_deg,
                               completions=tuple(sorted(e1.completions + (moved,))))
        cert = Certificate(n=cert.n, k=cert.k, bound_deg=cert.bound_deg,
                           entries=tuple(entries))
        report = verify_certificate(record_config_10(), cert, tol_deg=5e-4)
        assert not report.passed
        assert report.failed_check in (2, 3)

    def test_detects_wrong_bound(self):
        cert = tampered(record_certificate_10(), bound_deg=11.0)
        report = verify_certificate(record_config_10(), cert, tol_deg=5e-4)
        assert not report.passed
        assert report.failed_check == 4

    def test_shape_errors(self):
        cert = record_certificate_10()
        with pytest.raises(ShapeError):
            verify_certificate(circle_points(6), cert)
        bad = tampered(cert, completions=((1,), (1, 2)))
        with pytest.raises(ShapeError):
            verify_certificate(record_config_10(), bad)
        with pytest.raises(ShapeError):
            verify_certificate(record_config_10(),
                               Certificate(n=10, k=4, bound_deg=1.0, entries=()))


class TestSerialization:
    def test_round_trip(self, tmp_path):
        cert = generate_certificate(record_config_10(), 4)
        path = tmp_path / "cert.json"
        save_certificate(cert, path)
        loaded = load_certificate(path)
        assert loaded == cert

    def test_k4_fourth_points_are_ints(self):
        doc = certificate_to_dict(record_certificate_10())
        assert doc["entries"][0]["fourth_points"] == [0, 3, 4, 5, 7, 8, 9]
        assert certificate_from_dict(doc) == record_certificate_10()

    def test_k3_round_trip(self, tmp_path):
        cert = generate_certificate(circle_points(5), 3)
        path = tmp_path / "cert3.json"
        save_certificate(cert, path)
        assert load_certificate(path) == cert

    def test_malformed_documents(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ShapeError):
            load_certificate(path)
        with pytest.raises(ShapeError):
            certificate_from_dict({"n": 10, "k": 4})
        with pytest.raises(ShapeError):
            certificate_from_dict({"n": 10, "k": 4, "bound_deg": 1.0,
                                   "entries": [{"a": 0}]})

    def test_table_rendering(self):
        text = render_certificate_table(record_certificate_10())
        assert "P2 P1 P6" in text
        assert "0.0126" in text
        assert text.count("\n") == 55  # header x2 + 54 entries
