"""Command-line surface: searches, deciders, builders, reducers,
verifiers and the experiment suites.

Exit codes: 0 success / property holds, 1 usage or parse error,
2 definite negative (not synchronizing, blind, verification failed),
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import random
import sys
import time
from typing import Optional

from .automata import (Instance, augmentation_connects, is_strongly_connected,
                       run, word_tokens)
from .families import (block_language_shape, cerny, counting_word, de_bruijn,
                       debruijn_counter, switch_value, verify_de_bruijn,
                       window_permutation)
from .reduce import binary_chain, run_reduction
from .sampling import (random_careful_subset_pfa,
                       random_carefully_synchronizing_pfa,
                       random_connectable_pairs, random_dfa, random_nfa,
                       random_pfa, random_subset,
                       random_synchronizable_subset_dfa)
from .search import (BUDGET_EXCEEDED, FOUND, NOT_SYNCHRONIZING,
                     BlindSubsetError, BudgetExceededError, SearchBudget,
                     SearchResult, brute_force_oracle,
                     check_transversal_partition, composition_depth,
                     constant_target, directing_word, is_swap_congruence,
                     shortest_careful_reset, shortest_reset,
                     shortest_subset_reset)
from .textio import ParseError, load, save, serialize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2
EXIT_BUDGET = 3

WITNESS_LIMIT = 10_000


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _budget(args) -> SearchBudget:
    mem = int(os.environ.get("SYNCWORDS_MAX_MEMORY", 8 << 30))
    nodes = int(os.environ.get("SYNCWORDS_MAX_NODES", 10_000_000))
    return SearchBudget(
        max_nodes=args.max_nodes if getattr(args, "max_nodes", None) else nodes,
        max_length=getattr(args, "max_length", None) or 10_000_000,
        max_memory=mem,
    )


def _witness_block(instance: Instance, res: SearchResult, full: bool,
                   limit: int = WITNESS_LIMIT) -> dict:
    if res.witness is None:
        return {}
    text = word_tokens(instance.automaton.alphabet, res.witness)
    digest = hashlib.sha256(text.encode()).hexdigest()[:16]
    out = {"witness_length": len(res.witness), "witness_digest": digest}
    if full or len(res.witness) <= limit:
        out["witness"] = text
    else:
        runs = []
        prev, count = None, 0
        for x in res.witness:
            if x == prev:
                count += 1
            else:
                if prev is not None:
                    runs.append([instance.automaton.alphabet.symbols[prev], count])
                prev, count = x, 1
        runs.append([instance.automaton.alphabet.symbols[prev], count])
        out["witness_rle"] = runs
    return out


def _result_entry(instance: Instance, mode: str, res: SearchResult,
                  full_witness: bool, limit: int = WITNESS_LIMIT) -> dict:
    entry = {
        "mode": mode,
        "status": res.status,
        "length": res.length,
        "explored": res.explored,
    }
    entry.update(_witness_block(instance, res, full_witness, limit))
    return entry


def _instance_digest(instance: Instance) -> dict:
    a = instance.automaton
    return {
        "kind": a.kind,
        "states": a.n,
        "letters": len(a.alphabet),
        "subset_size": len(instance.subset) if instance.subset else None,
    }


def _report(command: str, instance: Optional[Instance], results: list[dict],
            checks: list[dict], started: float) -> dict:
    return {
        "command": command,
        "instance": _instance_digest(instance) if instance else None,
        "results": results,
        "checks": checks,
        "timing": {"elapsed_ms": round(1000 * (time.perf_counter() - started), 3)},
    }


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, ensure_ascii=False))
    elif fmt == "csv":
        rows = report.get("rows") or report["results"]
        if rows:
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
            print(buf.getvalue(), end="")
    else:
        print(f"# {report['command']}")
        if report.get("instance"):
            print("instance:", report["instance"])
        for r in report.get("rows", []) or report["results"]:
            print(" ".join(f"{k}={v}" for k, v in r.items()))
        for c in report["checks"]:
            mark = "pass" if c["pass"] else "FAIL"
            print(f"[{mark}] {c['name']}" + (f" ({c['info']})" if c.get("info") else ""))


def _status_exit(status: str) -> int:
    if status == FOUND:
        return EXIT_OK
    if status == BUDGET_EXCEEDED:
        return EXIT_BUDGET
    return EXIT_NEGATIVE


# --- subcommands --------------------------------------------------------------


def cmd_shortest(args) -> int:
    started = time.perf_counter()
    instance = load(args.file)
    a = instance.automaton
    budget = _budget(args)
    mode = args.mode
    if mode == "classic":
        res = shortest_reset(a, budget)
    elif mode == "careful":
        res = shortest_careful_reset(a, budget)
    elif mode == "subset":
        if instance.subset is None:
            raise CliError("subset mode needs a subset section in the file")
        res = shortest_subset_reset(a, instance.subset, budget)
    elif mode in ("d1", "d2", "d3"):
        res = directing_word(a, mode, budget)
    else:
        raise CliError(f"unknown mode {mode!r}")
    report = _report(f"shortest {mode}", instance,
                     [_result_entry(instance, mode, res, args.full_witness,
                                    args.witness_limit)],
                     [], started)
    _emit(report, args.format)
    return _status_exit(res.status)


def cmd_decide(args) -> int:
    started = time.perf_counter()
    instance = load(args.file)
    a = instance.automaton
    budget = _budget(args)
    if args.problem == "subset-sync":
        if instance.subset is None:
            raise CliError("subset-sync needs a subset section in the file")
        res = shortest_subset_reset(a, instance.subset, budget)
    else:
        res = shortest_careful_reset(a, budget)
    answer = {"problem": args.problem, "answer": "yes" if res.found else "no",
              "status": res.status, "explored": res.explored}
    report = _report(f"decide {args.problem}", instance, [answer], [], started)
    _emit(report, args.format)
    return _status_exit(res.status)


def cmd_build(args) -> int:
    started = time.perf_counter()
    if args.family == "counter":
        if args.m is None:
            raise CliError("counter needs --m")
        ci = debruijn_counter(args.m, args.xi)
        save(args.output, ci.instance)
        rows = [{
            "family": "counter", "m": ci.m, "states": ci.automaton.n,
            "letters": len(ci.automaton.alphabet), "subset_size": len(ci.subset),
            "partition_blocks": len(ci.instance.partition),
            "sequence": ci.bits,
            "sc_pairs": str(list(ci.sc_pairs)),
            "relevant_sc_pairs": str(list(ci.relevant_sc_pairs)),
            "file": args.output,
        }]
        instance = ci.instance
    elif args.family == "cerny":
        if args.n is None:
            raise CliError("cerny needs --n")
        instance = cerny(args.n)
        save(args.output, instance)
        rows = [{"family": "cerny", "states": args.n, "letters": 2,
                 "file": args.output}]
    elif args.family == "debruijn":
        if args.k is None:
            raise CliError("debruijn needs --k")
        bits = de_bruijn(args.k)
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(bits + "\n")
        rows = [{"family": "debruijn", "order": args.k, "length": len(bits),
                 "sequence": bits, "file": args.output}]
        instance = None
    else:
        raise CliError(f"unknown family {args.family!r}")
    _emit(_report(f"build {args.family}", instance, rows, [], started), args.format)
    return EXIT_OK


def cmd_reduce(args) -> int:
    started = time.perf_counter()
    budget = _budget(args)
    if args.op == "chain":
        if args.m is None:
            raise CliError("chain needs --m")
        reports = binary_chain(args.m, args.variant, budget)
        checks = []
        for i, rep in enumerate(reports):
            if args.output:
                path = f"{args.output}.{i}.{rep.name}.aut"
                save(path, rep.output)
            checks.extend(
                {"name": f"{rep.name}: {name}", "pass": passed}
                for name, passed in rep.checks
            )
        rows = [{"stage": rep.name, "states": rep.output.automaton.n,
                 "letters": len(rep.output.automaton.alphabet),
                 **{k: v for k, v in rep.details.items() if isinstance(v, (int, str))}}
                for rep in reports]
        report = _report(f"reduce chain {args.variant}", reports[-1].output,
                         rows, checks, started)
        _emit(report, args.format)
        return EXIT_OK if all(c["pass"] for c in checks) else EXIT_NEGATIVE
    if not args.file:
        raise CliError("reduce needs an input file (except op=chain)")
    instance = load(args.file)
    try:
        rep = run_reduction(args.op, instance, budget)
    except (ValueError, BlindSubsetError) as e:
        report = _report(f"reduce {args.op}", instance, [],
                         [{"name": "precondition", "pass": False, "info": str(e)}],
                         started)
        _emit(report, args.format)
        return EXIT_NEGATIVE
    if args.output:
        save(args.output, rep.output)
    checks = [{"name": name, "pass": passed} for name, passed in rep.checks]
    rows = [{"op": rep.name, "states": rep.output.automaton.n,
             "letters": len(rep.output.automaton.alphabet),
             **{k: v for k, v in rep.details.items() if isinstance(v, (int, str))}}]
    report = _report(f"reduce {args.op}", rep.output, rows, checks, started)
    _emit(report, args.format)
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def _verify_counter(instance: Instance, m: int, xi: Optional[str],
                    budget: SearchBudget) -> list[dict]:
    ci = debruijn_counter(m, xi)
    checks = []

    def add(name, passed, info=None):
        checks.append({"name": name, "pass": bool(passed),
                       **({"info": info} if info else {})})

    add("file matches the canonical build", serialize(instance) == serialize(ci.instance))
    a = ci.automaton
    from .automata import sink_states
    add("state count", a.n == 5 * m + ci.k + 3)
    add("sinks are drain and trap",
        sink_states(a) == frozenset((ci.drain, ci.trap)))
    finish_image = run(a, a.states, (3,))
    add("finish letter maps into the sinks",
        finish_image <= frozenset((ci.drain, ci.trap)))
    add("window permutation is a bijection",
        sorted(window_permutation(ci.bits)) == list(range(m)))
    add("arc pair set connects the automaton",
        augmentation_connects(a, ci.sc_pairs))
    viol = check_transversal_partition(a, ci.subset, ci.instance.partition, budget)
    add("transversal partition", viol is None)
    word = counting_word(m)
    image = run(a, ci.subset, word)
    add("counting word synchronizes", image == frozenset((ci.drain,)))
    if m <= 4:
        res = shortest_subset_reset(a, ci.subset, budget)
        add("search matches the counting word", res.witness == word,
            f"length {res.length}")
        add("witness language shape", block_language_shape(res.witness, ci.k))
        from .search import count_shortest_reset_words
        add("shortest word is unique",
            count_shortest_reset_words(a, ci.subset, budget) == (len(word), 1))
        values = [switch_value(ci, run(a, ci.subset, word[:j * (ci.k + 1)]))
                  for j in range((len(word) - 1) // (ci.k + 1) + 1)]
        add("switch trace counts 0..2^m-1",
            values == list(range(2 ** m)))
    return checks


def cmd_verify(args) -> int:
    started = time.perf_counter()
    budget = _budget(args)
    if args.check == "debruijn":
        with open(args.file, encoding="utf-8") as f:
            bits = f.read().split()[0]
        k = max(1, len(bits).bit_length() - 1)
        ok = len(bits) == 1 << k and verify_de_bruijn(bits, k)
        checks = [{"name": f"de Bruijn order {k}", "pass": ok}]
        _emit(_report("verify debruijn", None, [], checks, started), args.format)
        return EXIT_OK if ok else EXIT_NEGATIVE
    instance = load(args.file)
    a = instance.automaton
    if args.check == "sc":
        checks = [{"name": "strongly connected", "pass": is_strongly_connected(a)}]
    elif args.check == "swap":
        if instance.partition is None:
            raise CliError("swap check needs a partition section")
        checks = [{"name": "swap congruence",
                   "pass": is_swap_congruence(a, instance.partition)}]
    elif args.check == "transversal":
        if instance.subset is None or instance.partition is None:
            raise CliError("transversal check needs subset and partition sections")
        viol = check_transversal_partition(a, instance.subset,
                                           instance.partition, budget)
        checks = [{"name": "transversal partition", "pass": viol is None,
                   **({"info": f"violating word {viol.word} reaches "
                               f"{sorted(viol.subset)}"} if viol else {})}]
    elif args.check == "augmentation":
        if instance.pairs is None:
            raise CliError("augmentation check needs a pairs section")
        checks = [{"name": "arcs make the automaton strongly connected",
                   "pass": augmentation_connects(a, instance.pairs)}]
    elif args.check == "counter":
        if args.m is None:
            raise CliError("counter check needs --m")
        checks = _verify_counter(instance, args.m, args.xi, budget)
    else:
        raise CliError(f"unknown check {args.check!r}")
    report = _report(f"verify {args.check}", instance, [], checks, started)
    _emit(report, args.format)
    return EXIT_OK if all(c["pass"] for c in checks) else EXIT_NEGATIVE


# --- experiment suites ---------------------------------------------------------


def _suite_thresholds(args, budget) -> tuple[list[dict], list[dict]]:
    rows, checks = [], []
    for m in (2, 4, 8):
        ci = debruijn_counter(m)
        word = counting_word(m)
        formula = 2 ** m * (ci.k + 1) + 1
        if m <= 4:
            res = shortest_subset_reset(ci.automaton, ci.subset, budget)
            measured = res.length
            explored = res.explored
            status = res.status
        else:
            image = run(ci.automaton, ci.subset, word)
            measured = len(word) if image == frozenset((ci.drain,)) else None
            explored = 0
            status = "replay"
        rows.append({
            "m": m, "n": ci.automaton.n, "letters": 4, "mode": "subset",
            "status": status, "length": measured, "formula_value": formula,
            "match": measured == formula, "explored": explored,
            "elapsed_ms": None,
        })
        checks.append({"name": f"m={m}: measured length equals predicted word",
                       "pass": measured == len(word),
                       "info": f"measured {measured}, formula {formula}"
                               + ("" if measured == formula else
                                  " (one counting block below the formula)")})
    for variant, formula_fn in (("subset", lambda m: 60 * m + 12 * (m.bit_length() - 1) + 48),
                                ("careful", lambda m: 35 * m + 7 * (m.bit_length() - 1) + 21)):
        reports = binary_chain(2, variant, budget)
        final = reports[-1].output.automaton
        rows.append({
            "m": 2, "n": final.n, "letters": len(final.alphabet),
            "mode": f"chain-{variant}", "status": "ok" if all(r.ok for r in reports)
            else "fail", "length": reports[-1].details.get("witness_length"),
            "formula_value": formula_fn(2), "match": final.n == formula_fn(2),
            "explored": None, "elapsed_ms": None,
        })
        checks.append({"name": f"chain {variant} structural checks",
                       "pass": all(r.ok for r in reports),
                       "info": f"{final.n} states vs formula {formula_fn(2)}"})
    return rows, checks


def _suite_roundtrips(args, budget) -> tuple[list[dict], list[dict]]:
    rng = random.Random(args.seed)
    count = args.count or 50
    tallies = {name: [0, 0] for name in
               ("add-sinks", "connect", "double", "restart", "binarize")}
    gaps: dict[str, list[int]] = {name: [] for name in tallies}

    def note(name, rep):
        tallies[name][rep.ok] += 1
        if "length_in" in rep.details and "length_out" in rep.details:
            gaps[name].append(rep.details["length_out"] - rep.details["length_in"])

    for _ in range(count):
        a, s = random_careful_subset_pfa(rng, rng.randint(2, 6), rng.randint(2, 3))
        note("add-sinks", run_reduction("add-sinks", Instance(a, s), budget))

        b = random_carefully_synchronizing_pfa(rng, rng.randint(2, 6), 2)
        pairs = random_connectable_pairs(rng, b, min_arcs=1)
        note("connect", run_reduction("connect", Instance(b), budget, pairs=pairs))

        c, sc = random_synchronizable_subset_dfa(rng, rng.randint(2, 6), 2)
        pairs = random_connectable_pairs(rng, c, min_arcs=2)
        note("double", run_reduction("double", Instance(c, sc), budget, pairs=pairs))

        d = random_pfa(rng, rng.randint(2, 6), rng.randint(2, 3))
        seed_state = rng.randrange(d.n)
        try:
            from .search import relevant_part
            qrel, _ = relevant_part(d, (seed_state,), budget)
            note("restart", run_reduction(
                "restart", Instance(d, frozenset((seed_state,)), (qrel,)), budget))
        except BlindSubsetError:
            pass

        e, se = random_synchronizable_subset_dfa(rng, rng.randint(2, 5),
                                                 rng.randint(2, 3))
        note("binarize", run_reduction("binarize", Instance(e, se), budget))

    ci = debruijn_counter(2)
    note("restart", run_reduction("restart", ci.instance, budget))

    rows = []
    for name, (bad, good) in tallies.items():
        g = gaps[name]
        rows.append({
            "op": name, "instances": bad + good, "violations": bad,
            "gap_min": min(g) if g else None, "gap_max": max(g) if g else None,
            "gap_mean": round(sum(g) / len(g), 3) if g else None,
        })
    checks = [{"name": f"{name}: zero violations", "pass": bad == 0,
               "info": f"{good}/{bad + good} ok"}
              for name, (bad, good) in tallies.items()]
    return rows, checks


def _suite_oracle_cross(args, budget) -> tuple[list[dict], list[dict]]:
    rng = random.Random(args.seed)
    count = args.count or 100
    agree = 0
    total = 0
    for _ in range(count):
        n = rng.randint(2, 6)
        letters = rng.randint(2, 3)
        kind = rng.choice(("dfa", "pfa", "nfa"))
        if kind == "dfa":
            a = random_dfa(rng, n, letters)
            s = random_subset(rng, n)
            duties = [("classic", lambda: shortest_reset(a, budget)),
                      ("subset", lambda: shortest_subset_reset(a, s, budget))]
        elif kind == "pfa":
            a = random_pfa(rng, n, letters)
            s = random_subset(rng, n)
            duties = [("careful", lambda: shortest_careful_reset(a, budget)),
                      ("subset", lambda: shortest_subset_reset(a, s, budget))]
        else:
            a = random_nfa(rng, n, letters)
            s = None
            duties = [(mode, lambda mode=mode: directing_word(a, mode, budget))
                      for mode in ("d1", "d2", "d3")]
        ok = True
        for mode, engine in duties:
            res = engine()
            oracle = brute_force_oracle(a, s, mode, 10)
            total += 1
            if res.found and res.length <= 10:
                ok &= oracle.status == FOUND and oracle.length == res.length \
                    and oracle.witness == res.witness
            elif res.found:
                ok &= oracle.status == NOT_SYNCHRONIZING
            else:
                ok &= oracle.status == NOT_SYNCHRONIZING
        agree += ok
    rows = [{"instances": count, "mode_runs": total, "agreements": agree}]
    checks = [{"name": "oracle agrees on every instance", "pass": agree == count,
               "info": f"{agree}/{count}"}]
    return rows, checks


def _suite_nfa_modes(args, budget) -> tuple[list[dict], list[dict]]:
    rng = random.Random(args.seed)
    count = args.count or 50
    bad = []
    for i in range(count):
        n = rng.randint(2, 6)
        a = random_carefully_synchronizing_pfa(rng, n, rng.randint(2, 3))
        car = shortest_careful_reset(a, budget)
        d1 = directing_word(a, "d1", budget)
        d2 = directing_word(a, "d2", budget)
        d3 = directing_word(a, "d3", budget)
        if not (d1.length == d3.length == car.length
                and d2.found and d2.length <= d1.length
                and car.length <= 2 ** n - n - 1):
            bad.append(i)
    rows = [{"instances": count, "violations": len(bad)}]
    checks = [{"name": "d1 = d3 = careful, d2 <= d1, bound respected",
               "pass": not bad, "info": f"{count - len(bad)}/{count}"}]
    return rows, checks


def _suite_composition(args, budget) -> tuple[list[dict], list[dict]]:
    inst = cerny(4)
    a = inst.automaton
    gens = [tuple(next(iter(a.delta[s][x])) for s in a.states) for x in range(2)]
    res = composition_depth(4, gens, constant_target, budget)
    reset = shortest_reset(a, budget)
    rows = [{"generators": 2, "target": "constant", "depth": res.length,
             "reset_length": reset.length}]
    checks = [{"name": "composition depth equals reset length",
               "pass": res.length == reset.length == 9,
               "info": f"depth {res.length}"}]
    return rows, checks


SUITES = {
    "thresholds": _suite_thresholds,
    "reduction-roundtrips": _suite_roundtrips,
    "oracle-cross": _suite_oracle_cross,
    "nfa-modes": _suite_nfa_modes,
    "composition": _suite_composition,
}


def cmd_experiment(args) -> int:
    started = time.perf_counter()
    budget = _budget(args)
    rows, checks = SUITES[args.suite](args, budget)
    report = _report(f"experiment {args.suite}", None, [], checks, started)
    report["rows"] = rows
    _emit(report, args.format)
    return EXIT_OK if all(c["pass"] for c in checks) else EXIT_NEGATIVE


def _parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p = argparse.ArgumentParser(
        prog="syncwords",
        description="exact synchronization-word computation for finite automata")
    sub = p.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[shared], **kw)

    def common(sp):
        sp.add_argument("--max-nodes", type=int, default=None)
        sp.add_argument("--max-length", type=int, default=None)

    sp = add_parser("shortest", help="shortest word for a mode")
    sp.add_argument("file")
    sp.add_argument("--mode", required=True,
                    choices=("classic", "careful", "subset", "d1", "d2", "d3"))
    sp.add_argument("--full-witness", action="store_true")
    sp.add_argument("--witness-limit", type=int, default=WITNESS_LIMIT,
                    help="emit witnesses longer than this as run-length blocks")
    common(sp)
    sp.set_defaults(func=cmd_shortest)

    sp = add_parser("decide", help="existence decision")
    sp.add_argument("file")
    sp.add_argument("--problem", required=True,
                    choices=("subset-sync", "careful-sync"))
    common(sp)
    sp.set_defaults(func=cmd_decide)

    sp = add_parser("build", help="generate a family instance")
    sp.add_argument("family", choices=("counter", "cerny", "debruijn"))
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--xi", help="override De Bruijn sequence for the counter")
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(func=cmd_build)

    sp = add_parser("reduce", help="apply a threshold reduction")
    sp.add_argument("--op", required=True,
                    choices=("add-sinks", "connect", "double", "restart",
                             "binarize", "chain"))
    sp.add_argument("file", nargs="?")
    sp.add_argument("--m", type=int)
    sp.add_argument("--variant", choices=("subset", "careful"), default="subset")
    sp.add_argument("-o", "--output")
    common(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = add_parser("verify", help="structural verification")
    sp.add_argument("file")
    sp.add_argument("--check", required=True,
                    choices=("sc", "swap", "transversal", "augmentation",
                             "debruijn", "counter"))
    sp.add_argument("--m", type=int)
    sp.add_argument("--xi")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = add_parser("experiment", help="run an experiment suite")
    sp.add_argument("suite", choices=tuple(SUITES))
    sp.add_argument("--seed", type=int, default=2024)
    sp.add_argument("--count", type=int, default=None)
    sp.add_argument("--determinism", choices=("strict", "fast"), default="strict")
    common(sp)
    sp.set_defaults(func=cmd_experiment)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except BlindSubsetError as e:
        print(f"negative: {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    except BudgetExceededError as e:
        print(f"budget: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
