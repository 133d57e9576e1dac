import json

from click.testing import CliRunner

from poscat.category import builtin, category_to_dict, find_isomorphism
from poscat.cli import main
from poscat.serialize import load_category, write_json


def run(*args):
    res = CliRunner().invoke(main, list(args))
    return res.exit_code, res.output


def test_validate_builtins():
    assert run("validate", "builtin:ONE")[0] == 0
    code, out = run("validate", "builtin:IDEM")
    assert code == 0 and json.loads(out)["verdict"] is True


def test_validate_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"objects": ["x"], "morphisms": [{"id": "e", "dom": "x", "cod": "x"}]}))
    code, out = run("validate", str(bad))
    assert code == 1
    entry = json.loads(out)["entries"][0]
    assert entry["name"] == "MissingComposite" and entry["witness"]["witness"] == [1, 1]
    junk = tmp_path / "junk.json"
    junk.write_text("{")
    assert run("validate", str(junk))[0] == 2
    assert run("validate", "builtin:NOPE")[0] == 2


def test_check_modes():
    assert run("check", "builtin:ARROW", "--exact")[0] == 0
    assert run("check", "builtin:ONE", "--regular")[0] == 0
    code, out = run("check", "builtin:IDEM", "--weakly-lex")
    assert code == 1
    fail = [e for e in json.loads(out)["entries"] if not e["passed"]][0]
    assert fail["name"] == "weak product x×x"
    assert fail["witness"]["counterexample"] == {"apex": "x", "legs": ["id_x", "id_x"]}
    assert run("check", "builtin:ARROW")[0] == 2
    code, out = run("check", "builtin:ARROW", "--projectives", "--format", "text")
    assert code == 0 and "projective cover" in out
    assert run("check", "builtin:ARROW", "--projectives", "--cover", "a")[0] == 1
    assert run("check", "builtin:ARROW", "--projectives", "--cover", "zz")[0] == 2


def test_complete(tmp_path):
    code, out = run("complete", "builtin:ONE")
    assert code == 0
    cat = json.loads(out)["entries"][0]["witness"]["category"]
    assert find_isomorphism(load_category(cat), builtin("ONE")) is not None
    code, out = run("complete", "builtin:ARROW", "-o", str(tmp_path / "arr"), "--crosscheck")
    assert code == 0
    assert find_isomorphism(load_category(str(tmp_path / "arr" / "cat.json")), builtin("ARROW")) is not None
    code, out = run("complete", "builtin:IDEM")
    assert code == 1 and json.loads(out)["entries"][0]["name"] == "NotWeaklyLex"


def test_extend_gamma_over_arrow(tmp_path):
    assert run("complete", "builtin:ARROW", "-o", str(tmp_path / "arr"))[0] == 0
    code, out = run("extend", "--functor", str(tmp_path / "arr" / "gamma.json"), "--completion", str(tmp_path / "arr"))
    assert code == 0
    entry = [e for e in json.loads(out)["entries"] if e["name"] == "F̄ equivalence"][0]
    assert entry["witness"]["equivalence"] is True


def test_extend_not_left_covering(tmp_path):
    write_json(tmp_path / "a.json", category_to_dict(builtin("ARROW")))
    data = {"source": "a.json", "target": "a.json", "objMap": {"a": "a", "b": "a"}, "morMap": {"f": "id_a"}}
    write_json(tmp_path / "F.json", data)
    code, out = run("extend", "--functor", str(tmp_path / "F.json"))
    assert code == 1
    write_json(tmp_path / "G.json", dict(data, objMap={"a": "zz", "b": "a"}))
    assert run("extend", "--functor", str(tmp_path / "G.json"))[0] == 2


def test_corpus_small():
    code, out = run("corpus", "--objects", "1", "--morphisms", "2", "--assert-theorems", "--no-extra")
    assert code == 0
    d = json.loads(out)
    assert d["summary"]["total"] == 5 and d["summary"]["weakly_lex"] == 1 and d["verdict"] is True
    code, out = run("corpus", "--objects", "1", "--morphisms", "2", "--format", "text", "--no-extra")
    assert "5 categories" in out


def test_dot_command():
    code, out = run("dot", "builtin:ARROW", "--show-ids")
    assert code == 0
    assert out.count("->") == 3
