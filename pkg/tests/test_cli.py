import json
import random

import pytest

from geproci.cli import main
from geproci.configs import Configuration, named, save, unity_grid
from geproci.field import make_field
from geproci.projgeom import ProjPoint


@pytest.fixture
def d4_file(tmp_path):
    path = tmp_path / "d4.json"
    save(named("d4"), str(path))
    return str(path)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def save_random(tmp_path, count, dim, seed, name="rand.json"):
    fs = make_field([])
    rng = random.Random(seed)
    pts = []
    while len(pts) < count:
        q = ProjPoint.make([rng.randrange(fs.p) for _ in range(dim + 1)],
                           fs.p)
        if q not in pts:
            pts.append(q)
    path = tmp_path / name
    save(Configuration("random", dim, fs, pts), str(path))
    return str(path)


# ---------------------------------------------------------------------------
# construct

def test_construct_named(tmp_path, capsys):
    out_file = tmp_path / "out.json"
    code, out = run(capsys, "construct", "d4", "-o", str(out_file))
    assert code == 0
    assert out_file.exists()
    with open(out_file) as fh:
        assert len(json.load(fh)["points"]) == 12


def test_construct_grid_and_std(tmp_path, capsys):
    g = tmp_path / "g.json"
    s = tmp_path / "s.json"
    assert run(capsys, "construct", "grid", "-a", "3", "-b", "4",
               "-o", str(g))[0] == 0
    assert run(capsys, "construct", "std", "-n", "3", "--which", "Y1",
               "-o", str(s))[0] == 0
    with open(s) as fh:
        assert len(json.load(fh)["points"]) == 12


def test_construct_unknown_label(tmp_path, capsys):
    code, _ = run(capsys, "construct", "nonesuch",
                  "-o", str(tmp_path / "x.json"))
    assert code == 3


# ---------------------------------------------------------------------------
# check

def test_check_geproci_yes(d4_file, capsys):
    code, out = run(capsys, "--json", "check", "geproci",
                    "-a", "3", "-b", "4", d4_file)
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"verdict", "prime", "seed", "trials", "data"}
    assert doc["verdict"] == "Yes"


def test_check_geproci_no(tmp_path, capsys):
    path = save_random(tmp_path, 12, 3, seed=5)
    code, _ = run(capsys, "check", "geproci", "-a", "3", "-b", "4", path)
    assert code == 1


def test_check_geproci_json_is_deterministic(d4_file, capsys):
    args = ("--json", "check", "geproci", "-a", "3", "-b", "4",
            "--seed", "7", d4_file)
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first == second


def test_check_ci222_no(tmp_path, capsys):
    path = save_random(tmp_path, 8, 4, seed=6)
    code, out = run(capsys, "--json", "check", "ci222", path)
    assert code == 1
    assert json.loads(out)["verdict"] == "No"


# ---------------------------------------------------------------------------
# census

def test_census_lines(d4_file, capsys):
    code, out = run(capsys, "census", "lines", d4_file)
    assert code == 0
    assert json.loads(out) == {"2": 18, "3": 16}


def test_census_planes_json(d4_file, capsys):
    code, out = run(capsys, "--json", "census", "planes", d4_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["data"]["histogram"] == {"3": 12, "6": 12}


# ---------------------------------------------------------------------------
# weddle

def test_weddle_degree_of_grid(tmp_path, capsys):
    path = tmp_path / "g23.json"
    save(unity_grid(2, 3), str(path))
    code, out = run(capsys, "--json", "weddle", "degree", "-d", "2", path)
    assert code == 0
    assert json.loads(out)["data"]["degree"] == "IdenticallyZero"


def test_weddle_member_needs_probe(tmp_path, capsys):
    path = save_random(tmp_path, 6, 3, seed=7)
    assert run(capsys, "weddle", "member", "-d", "2", path)[0] == 3


def test_weddle_member_with_probe(tmp_path, capsys):
    path = save_random(tmp_path, 5, 3, seed=8)
    cfg = Configuration  # probe on the line through the first two points
    from geproci.configs import load
    base = load(path)
    q1, q2 = base.points[0], base.points[1]
    p = base.field.p
    on_line = ProjPoint.make(
        [(x + 3 * y) % p for x, y in zip(q1.coords, q2.coords)], p)
    probe_path = tmp_path / "probe.json"
    save(cfg("probe", 3, base.field, [on_line]), str(probe_path))
    code, _ = run(capsys, "weddle", "member", "-d", "2",
                  "--probe", str(probe_path), path)
    assert code == 0


# ---------------------------------------------------------------------------
# unexpected

def test_unexpected_cone_predicate(d4_file, capsys):
    code, out = run(capsys, "--json", "unexpected", "c", "-t", "3", d4_file)
    assert code == 0
    assert json.loads(out)["data"]["unexpected"] is True


def test_unexpected_negative_case(tmp_path, capsys):
    path = tmp_path / "g24.json"
    save(unity_grid(2, 4), str(path))
    assert run(capsys, "unexpected", "c", "-t", "4", path)[0] == 1


def test_unexpected_adim_needs_m(d4_file, capsys):
    assert run(capsys, "unexpected", "adim", "-t", "3", d4_file)[0] == 3
    code, out = run(capsys, "--json", "unexpected", "adim",
                    "-t", "3", "-m", "3", d4_file)
    assert code == 0
    assert json.loads(out)["data"]["adim"] == 1


# ---------------------------------------------------------------------------
# ks, cbp, remember, equiv

def test_ks_verdicts(tmp_path, capsys):
    path = tmp_path / "r13.json"
    save(named("rays13"), str(path))
    code, out = run(capsys, "--json", "ks", path)
    assert code == 0
    assert json.loads(out)["data"]["bases"] == 4

    fs = make_field([])
    basis = [ProjPoint.make([1 if j == i else 0 for j in range(4)], fs.p)
             for i in range(4)]
    bpath = tmp_path / "basis.json"
    save(Configuration("basis", 3, fs, basis), str(bpath))
    assert run(capsys, "ks", str(bpath))[0] == 1


def test_cbp_both_modes(tmp_path, capsys):
    from geproci.projgeom import segre
    fs = make_field([])
    rng = random.Random(5)

    def rp(n):
        return ProjPoint.make([rng.randrange(fs.p) for _ in range(n)], fs.p)

    pts = [segre(rp(2), rp(2)) for _ in range(10)] + [rp(4)]
    path = tmp_path / "qa.json"
    save(Configuration("quadric_plus_apex", 3, fs, pts), str(path))
    assert run(capsys, "cbp", path)[0] == 0
    assert run(capsys, "cbp", "--ambient", path)[0] == 1


def test_remember_full_subset(d4_file, tmp_path, capsys):
    idx = tmp_path / "idx.json"
    idx.write_text(json.dumps(list(range(12))))
    code, _ = run(capsys, "remember", "-m", "3", "--subset", str(idx),
                  d4_file)
    assert code == 0


def test_equiv_verdicts(tmp_path, d4_file, capsys):
    g1 = tmp_path / "g1.json"
    g2 = tmp_path / "g2.json"
    save(unity_grid(3, 4), str(g1))
    save(unity_grid(3, 4), str(g2))
    assert run(capsys, "equiv", str(g1), str(g2))[0] == 0
    assert run(capsys, "equiv", str(g1), d4_file)[0] == 1


# ---------------------------------------------------------------------------
# usage errors and the suite

def test_missing_file_is_usage_error(capsys):
    assert run(capsys, "census", "lines", "/nonexistent.json")[0] == 3


def test_unknown_command(capsys):
    assert run(capsys, "frobnicate")[0] == 3


def test_no_command_prints_usage(capsys):
    assert main([]) == 3


def test_suite_census_group(capsys):
    code, out = run(capsys, "suite", "census")
    assert code == 0
    assert "[PASS]" in out
    assert "[FAIL]" not in out


def test_suite_unknown_group(capsys):
    assert run(capsys, "suite", "nonesuch")[0] == 3
