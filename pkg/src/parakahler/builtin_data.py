"""Builtin catalog document: 15 symplectic Lie algebras, 57 structures.

The document follows the external catalog schema exactly (see catalog.py),
so the builtin data and user-supplied files go through one loader.  Expected
labels and Ricci operators are stored as published; the verifier recomputes
everything and reports disagreements rather than editing this table.

Entries marked ``variant`` are optional relatives (a sign-twin sharing its J,
and one constrained specialization); they are excluded from the default
57-entry catalog.
"""


def _alg(name, dim, params, brackets, forms, structures):
    return {
        "name": name,
        "dim": dim,
        "params": params,
        "brackets": brackets,
        "forms": forms,
        "structures": structures,
    }


def _p(name, kind="free", **kw):
    domain = {"kind": kind}
    domain.update(kw)
    return {"name": name, "domain": domain}


def _s(sid, form, j_rows, params, expected=None, variant=False, note=""):
    out = {
        "id": sid,
        "form": form,
        "J": j_rows,
        "params": [_p(n) for n in params],
        "expected": expected or {},
    }
    if variant:
        out["variant"] = True
    if note:
        out["note"] = note
    return out


_DIAG = lambda *d: [  # noqa: E731 - tiny local shorthand for diagonal matrices
    [d[0], "0", "0", "0"],
    ["0", d[1], "0", "0"],
    ["0", "0", d[2], "0"],
    ["0", "0", "0", d[3]],
]

BUILTIN_DOCUMENT = {
    "algebras": [
        _alg(
            "r2r2",
            4,
            [_p("lam", "positive")],
            [[1, 2, 2, "1"], [3, 4, 4, "1"]],
            [
                {"id": "lambdapos", "terms": [[1, 2, "1"], [1, 3, "lam"], [3, 4, "1"]]},
                {"id": "lambda0", "terms": [[1, 2, "1"], [3, 4, "1"]]},
            ],
            [
                _s(
                    "r2r2.lambdapos.J11",
                    "lambdapos",
                    [["-1", "0", "0", "0"], ["a", "1", "0", "0"],
                     ["0", "0", "1", "0"], ["0", "0", "b", "-1"]],
                    ["a", "b"],
                    {"label": "flat"},
                ),
                _s(
                    "r2r2.lambdapos.J12",
                    "lambdapos",
                    [["-1", "0", "2", "0"], ["-a", "1", "a", "0"],
                     ["0", "0", "1", "0"], ["a", "-2", "b", "-1"]],
                    ["a", "b"],
                    {"label": "flat"},
                ),
                _s(
                    "r2r2.lambdapos.J13",
                    "lambdapos",
                    [["-1", "0", "0", "0"], ["a", "1", "b", "2"],
                     ["-2", "0", "1", "0"], ["b", "0", "-b", "-1"]],
                    ["a", "b"],
                    {"label": "flat"},
                ),
                _s(
                    "r2r2.lambda0.J21",
                    "lambda0",
                    [["-a", "b", "0", "0"], ["-(a^2-1)/b", "a", "0", "0"],
                     ["0", "0", "c", "-(c^2-1)/d"], ["0", "0", "d", "-c"]],
                    ["a", "b", "c", "d"],
                    {
                        "label": "hermitian_ricci",
                        "ric": _DIAG("-b", "-b", "(c^2-1)/d", "(c^2-1)/d"),
                    },
                ),
                _s(
                    "r2r2.lambda0.J22",
                    "lambda0",
                    [["a+1", "b", "c-1", "b"],
                     ["-a*(a+2)/b", "-a-1", "-(c-1)*a/b", "-a"],
                     ["a", "b", "c", "b"],
                     ["-(c-1)*a/b", "1-c", "-(c^2-1)/b", "-c"]],
                    ["a", "b", "c"],
                    {
                        "label": "einstein",
                        "einstein_factor": "-3*b/2",
                        "ric": _DIAG("-3*b/2", "-3*b/2", "-3*b/2", "-3*b/2"),
                    },
                ),
                _s(
                    "r2r2.lambda0.J23",
                    "lambda0",
                    [["1", "0", "0", "0"], ["a", "-1", "0", "0"],
                     ["0", "0", "b", "-(b^2-1)/c"], ["0", "0", "c", "-b"]],
                    ["a", "b", "c"],
                    {
                        "label": "hermitian_ricci",
                        "ric": _DIAG("0", "0", "(b^2-1)/c", "(b^2-1)/c"),
                    },
                ),
                _s(
                    "r2r2.lambda0.J24",
                    "lambda0",
                    [["-a", "b", "0", "0"], ["-(a^2-1)/b", "a", "0", "0"],
                     ["0", "0", "-1", "c"], ["0", "0", "0", "1"]],
                    ["a", "b", "c"],
                    {
                        "label": "hermitian_ricci",
                        "ric": _DIAG("-b", "-b", "-c", "-c"),
                    },
                ),
                _s(
                    "r2r2.lambda0.J25",
                    "lambda0",
                    [["1", "0", "0", "0"], ["a", "-1", "b", "-2"],
                     ["2", "0", "-1", "0"], ["b", "0", "-b", "1"]],
                    ["a", "b"],
                    {"label": "flat"},
                ),
                _s(
                    "r2r2.lambda0.J24bc",
                    "lambda0",
                    [["-a", "b", "0", "0"], ["-(a^2-1)/b", "a", "0", "0"],
                     ["0", "0", "-1", "b"], ["0", "0", "0", "1"]],
                    ["a", "b"],
                    {
                        "label": "einstein",
                        "einstein_factor": "-b",
                        "ric": _DIAG("-b", "-b", "-b", "-b"),
                    },
                    variant=True,
                    note="J24 specialized to c = b, where the structure is Einstein",
                ),
            ],
        ),
        _alg(
            "rh3",
            4,
            [],
            [[1, 2, 3, "1"]],
            [{"id": "omega", "terms": [[1, 4, "1"], [2, 3, "1"]]}],
            [
                _s(
                    "rh3.omega.J1",
                    "omega",
                    [["a", "-b", "0", "0"],
                     ["(a^2-1)/b", "-a", "0", "0"],
                     ["d", "c", "a", "b"],
                     ["-(c*a^2+2*d*a*b-c)/b^2", "d", "-(a^2-1)/b", "-a"]],
                    ["a", "b", "c", "d"],
                    {"label": "flat"},
                ),
                _s(
                    "rh3.omega.J2",
                    "omega",
                    [["1", "-b", "0", "0"], ["0", "-1", "0", "0"],
                     ["-b*d/2", "c", "1", "b"], ["d", "-b*d/2", "0", "-1"]],
                    ["b", "c", "d"],
                    {"label": "flat"},
                ),
            ],
        ),
        _alg(
            "rr30",
            4,
            [],
            [[1, 2, 2, "1"]],
            [{"id": "omega", "terms": [[1, 2, "1"], [3, 4, "1"]]}],
            [
                _s(
                    "rr30.omega.J1",
                    "omega",
                    [["-a", "c", "0", "0"], ["-(a^2-1)/c", "a", "0", "0"],
                     ["0", "0", "b", "-(b^2-1)/d"], ["0", "0", "d", "-b"]],
                    ["a", "b", "c", "d"],
                    {
                        "label": "hermitian_ricci",
                        "ric": _DIAG("-c", "-c", "0", "0"),
                    },
                ),
                _s(
                    "rr30.omega.J2",
                    "omega",
                    [["-1", "0", "0", "0"], ["a", "1", "0", "0"],
                     ["0", "0", "b", "-(b^2-1)/c"], ["0", "0", "c", "-b"]],
                    ["a", "b", "c"],
                    {"label": "flat"},
                ),
            ],
        ),
        _alg(
            "rr3m1",
            4,
            [],
            [[1, 2, 2, "1"], [1, 3, 3, "-1"]],
            [{"id": "omega", "terms": [[1, 4, "1"], [2, 3, "1"]]}],
            [
                _s(
                    "rr3m1.omega.J1",
                    "omega",
                    [["1", "0", "0", "0"], ["0", "-1", "0", "0"],
                     ["0", "a", "1", "0"], ["b", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "rr3m1.omega.J2",
                    "omega",
                    [["-1", "0", "0", "0"], ["0", "-1", "a", "0"],
                     ["0", "0", "1", "0"], ["b", "0", "0", "1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "rr3m1.omega.J3",
                    "omega",
                    [["-a", "0", "0", "-(a^2-1)/b"], ["0", "-1", "0", "0"],
                     ["0", "0", "1", "0"], ["b", "0", "0", "a"]],
                    ["a", "b"],
                    {"label": "flat"},
                ),
            ],
        ),
        _alg(
            "r2p",
            4,
            [],
            [[1, 3, 3, "1"], [1, 4, 4, "1"], [2, 3, 4, "1"], [2, 4, 3, "-1"]],
            [{"id": "omega", "terms": [[1, 4, "1"], [2, 3, "1"]]}],
            [
                _s(
                    "r2p.omega.J1",
                    "omega",
                    [["-a", "b", "c", "-d"],
                     ["-b", "-a", "d", "c"],
                     ["-(2*d*a*b+c*(a^2-b^2-1))/(d^2+c^2)",
                      "(2*c*a*b-d*(a^2-b^2-1))/(d^2+c^2)", "a", "-b"],
                     ["-(2*c*a*b-d*(a^2-b^2-1))/(d^2+c^2)",
                      "-(2*d*a*b+c*(a^2-b^2-1))/(d^2+c^2)", "b", "a"]],
                    ["a", "b", "c", "d"],
                    {
                        "label": "hermitian_ricci",
                        "ric": [["2*d", "-2*c", "0", "0"],
                                ["2*c", "2*d", "0", "0"],
                                ["0", "0", "2*d", "-2*c"],
                                ["0", "0", "2*c", "2*d"]],
                    },
                    note="rows 3-4 resolved from the displayed component formulas",
                ),
                _s(
                    "r2p.omega.J2",
                    "omega",
                    [["-(a*b+c^2+2)/2", "-c", "0", "b"],
                     ["0", "-1", "0", "0"],
                     ["-c*(a*b+c^2+4)/(2*b)", "a", "1", "c"],
                     ["-(a^2*b^2+2*a*b*c^2+c^4+4*a*b+4*c^2)/(4*b)",
                      "-c*(a*b+c^2+4)/(2*b)", "0", "(a*b+c^2+2)/2"]],
                    ["a", "b", "c"],
                    {
                        "label": "einstein",
                        "einstein_factor": "-3*b/2",
                        "ric": _DIAG("-3*b/2", "-3*b/2", "-3*b/2", "-3*b/2"),
                    },
                ),
                _s(
                    "r2p.omega.J3",
                    "omega",
                    [["-1", "0", "0", "0"], ["0", "-1", "0", "0"],
                     ["a", "b", "1", "0"], ["-b", "a", "0", "1"]],
                    ["a", "b"],
                    {"label": "flat"},
                ),
            ],
        ),
        _alg(
            "r40",
            4,
            [],
            [[1, 4, 1, "-1"], [3, 4, 2, "-1"]],
            [
                {"id": "omegap", "terms": [[1, 4, "1"], [2, 3, "1"]]},
                {"id": "omegam", "terms": [[1, 4, "1"], [2, 3, "-1"]]},
            ],
            [
                _s(
                    "r40.omegap.Jp",
                    "omegap",
                    [["-1", "0", "0", "a"], ["0", "1", "b", "0"],
                     ["0", "0", "-1", "0"], ["0", "0", "0", "1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "r40.omegam.Jm",
                    "omegam",
                    [["1", "0", "0", "-a"], ["0", "-1", "-b", "0"],
                     ["0", "0", "1", "0"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                    note="sign twin: Jm = -Jp, paired with the opposite form",
                ),
            ],
        ),
        _alg(
            "r4m1",
            4,
            [],
            [[1, 4, 1, "-1"], [2, 4, 2, "1"], [3, 4, 2, "-1"], [3, 4, 3, "1"]],
            [{"id": "omega", "terms": [[1, 3, "1"], [2, 4, "1"]]}],
            [
                _s(
                    "r4m1.omega.J",
                    "omega",
                    [["-1", "0", "a", "0"], ["0", "1", "0", "b"],
                     ["0", "0", "1", "0"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
            ],
        ),
        _alg(
            "r4m1b",
            4,
            [_p("beta", "open-interval", lo="-1", hi="0")],
            [[1, 4, 1, "-1"], [2, 4, 2, "1"], [3, 4, 3, "-beta"]],
            [{"id": "omega", "terms": [[1, 2, "1"], [3, 4, "1"]]}],
            [
                _s(
                    "r4m1b.omega.J1",
                    "omega",
                    [["-1", "0", "0", "0"], ["0", "1", "0", "0"],
                     ["0", "0", "a", "-(a^2-1)/b"], ["0", "0", "b", "-a"]],
                    ["a", "b"],
                    {
                        "label": "hermitian_ricci",
                        "ric": _DIAG("0", "0", "b*beta^2", "b*beta^2"),
                    },
                ),
                _s(
                    "r4m1b.omega.J2",
                    "omega",
                    [["1", "0", "0", "0"], ["a", "-1", "0", "0"],
                     ["0", "0", "1", "b"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "r4m1b.omega.J3",
                    "omega",
                    [["-1", "a", "0", "0"], ["0", "1", "0", "0"],
                     ["0", "0", "1", "b"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
            ],
        ),
        _alg(
            "r4m1m1",
            4,
            [],
            [[1, 4, 1, "-1"], [2, 4, 2, "1"], [3, 4, 3, "1"]],
            [{"id": "omega", "terms": [[1, 2, "1"], [3, 4, "1"]]}],
            [
                _s(
                    "r4m1m1.omega.J1",
                    "omega",
                    [["-1", "-a^2/b", "a", "-a*(c-1)/b"],
                     ["0", "1", "0", "0"],
                     ["0", "-a*(c-1)/b", "c", "-(c^2-1)/b"],
                     ["0", "-a", "b", "-c"]],
                    ["a", "b", "c"],
                    {
                        "label": "hermitian_ricci",
                        "ric": [["0", "0", "0", "0"],
                                ["0", "0", "-a", "0"],
                                ["0", "0", "b", "0"],
                                ["a", "0", "0", "b"]],
                    },
                ),
                _s(
                    "r4m1m1.omega.J2",
                    "omega",
                    [["a", "0", "0", "-(a^2-1)/b"],
                     ["c", "-a", "b", "-d"],
                     ["d", "-(a^2-1)/b", "a", "(c*a^2-2*b*d*a-c)/b^2"],
                     ["b", "0", "0", "-a"]],
                    ["a", "b", "c", "d"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "r4m1m1.omega.J3",
                    "omega",
                    [["-1", "a", "0", "0"], ["0", "1", "0", "0"],
                     ["0", "0", "1", "b"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "r4m1m1.omega.J4",
                    "omega",
                    [["-1", "0", "0", "2*a/b"], ["b", "1", "0", "-a"],
                     ["a", "2*a/b", "-1", "c"], ["0", "0", "0", "1"]],
                    ["a", "b", "c"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "r4m1m1.omega.J5",
                    "omega",
                    [["1", "0", "0", "a"], ["0", "-1", "0", "0"],
                     ["0", "a", "1", "b"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "flat"},
                ),
            ],
        ),
        _alg(
            "r4maa",
            4,
            [_p("alpha", "open-interval", lo="0", hi="1")],
            [[1, 4, 1, "-1"], [2, 4, 2, "alpha"], [3, 4, 3, "-alpha"]],
            [{"id": "omega", "terms": [[1, 4, "1"], [2, 3, "1"]]}],
            [
                _s(
                    "r4maa.omega.J1",
                    "omega",
                    [["-a", "0", "0", "-(a^2-1)/b"], ["0", "-1", "0", "0"],
                     ["0", "0", "1", "0"], ["b", "0", "0", "a"]],
                    ["a", "b"],
                    {
                        "label": "hermitian_ricci",
                        "ric": _DIAG("b", "0", "0", "b"),
                    },
                ),
                _s(
                    "r4maa.omega.J2",
                    "omega",
                    [["1", "0", "0", "a"], ["0", "-1", "b", "0"],
                     ["0", "0", "1", "0"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "r4maa.omega.J3",
                    "omega",
                    [["1", "0", "0", "a"], ["0", "1", "0", "0"],
                     ["0", "b", "-1", "0"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
            ],
        ),
        _alg(
            "d41",
            4,
            [],
            [[1, 2, 3, "1"], [1, 4, 1, "-1"], [3, 4, 3, "-1"]],
            [
                {"id": "omega1", "terms": [[1, 2, "1"], [3, 4, "-1"]]},
                {"id": "omega2", "terms": [[1, 2, "1"], [2, 4, "1"], [3, 4, "-1"]]},
            ],
            [
                _s(
                    "d41.omega1.J11",
                    "omega1",
                    [["-a", "0", "0", "(a^2-1)/b"],
                     ["c", "a", "b", "d"],
                     ["d", "-(a^2-1)/b", "-a", "-(c*a^2+2*a*b*d-c)/b^2"],
                     ["-b", "0", "0", "a"]],
                    ["a", "b", "c", "d"],
                    {
                        "label": "hermitian_ricci",
                        "ric": [["0", "0", "2*b", "0"],
                                ["0", "0", "0", "0"],
                                ["0", "0", "0", "0"],
                                ["0", "-2*b", "0", "0"]],
                    },
                ),
                _s(
                    "d41.omega1.J12",
                    "omega1",
                    [["1", "0", "0", "2*a/b"], ["b", "-1", "0", "a"],
                     ["a", "-2*a/b", "1", "c"], ["0", "0", "0", "-1"]],
                    ["a", "b", "c"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "d41.omega1.J13",
                    "omega1",
                    [["1", "a^2/b", "a", "-a*(c+1)/b"],
                     ["0", "-1", "0", "0"],
                     ["0", "a*(c+1)/b", "c", "-(c^2-1)/b"],
                     ["0", "a", "b", "-c"]],
                    ["a", "b", "c"],
                    {
                        "label": "einstein",
                        "einstein_factor": "-3*b/2",
                        "ric": _DIAG("-3*b/2", "-3*b/2", "-3*b/2", "-3*b/2"),
                    },
                ),
                _s(
                    "d41.omega1.J14",
                    "omega1",
                    [["-1", "a", "0", "0"], ["0", "1", "0", "0"],
                     ["0", "0", "1", "b"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "flat"},
                ),
                _s(
                    "d41.omega1.J15",
                    "omega1",
                    [["-1", "0", "0", "-a"], ["0", "1", "0", "0"],
                     ["0", "a", "-1", "b"], ["0", "0", "0", "1"]],
                    ["a", "b"],
                    {"label": "flat"},
                ),
                _s(
                    "d41.omega2.J21",
                    "omega2",
                    [["1", "a", "0", "0"], ["0", "-1", "0", "0"],
                     ["0", "0", "-1", "b"], ["0", "0", "0", "1"]],
                    ["a", "b"],
                    {"label": "flat"},
                ),
            ],
        ),
        _alg(
            "d42",
            4,
            [],
            [[1, 2, 3, "1"], [1, 4, 1, "-2"], [2, 4, 2, "1"], [3, 4, 3, "-1"]],
            [
                {"id": "omega1", "terms": [[1, 2, "1"], [3, 4, "-1"]]},
                {"id": "omega2", "terms": [[1, 4, "1"], [2, 3, "1"]]},
                {"id": "omega3", "terms": [[1, 4, "1"], [2, 3, "-1"]]},
            ],
            [
                _s(
                    "d42.omega1.J11",
                    "omega1",
                    [["-1", "0", "0", "0"], ["0", "1", "0", "0"],
                     ["0", "0", "a", "b"], ["0", "0", "-(a^2-1)/b", "-a"]],
                    ["a", "b"],
                    {"label": "einstein", "einstein_factor": "3*(a^2-1)/(2*b)"},
                ),
                _s(
                    "d42.omega1.J12",
                    "omega1",
                    [["-1", "a", "0", "0"], ["0", "1", "0", "0"],
                     ["0", "0", "1", "b"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "d42.omega1.J13",
                    "omega1",
                    [["1", "0", "0", "0"], ["a", "-1", "0", "0"],
                     ["0", "0", "1", "b"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "d42.omega2.J21",
                    "omega2",
                    [["a", "0", "0", "2*(a^2-1)/b"],
                     ["0", "-a", "b", "0"],
                     ["0", "-(a^2-1)/b", "a", "0"],
                     ["-b/2", "0", "0", "-a"]],
                    ["a", "b"],
                    {"ric": _DIAG("-3*b", "0", "0", "-3*b")},
                ),
                _s(
                    "d42.omega2.J22",
                    "omega2",
                    [["-a", "0", "0", "-b*(a+1)"], ["0", "1", "0", "0"],
                     ["0", "b", "-1", "0"], ["(a-1)/b", "0", "0", "a"]],
                    ["a", "b"],
                    {"ric": _DIAG("4*(a-1)/b", "0", "0", "4*(a-1)/b")},
                ),
                _s(
                    "d42.omega3.J31",
                    "omega3",
                    [["-a", "0", "0", "2*(a^2-1)/b"],
                     ["0", "a", "b", "0"],
                     ["0", "-(a^2-1)/b", "-a", "0"],
                     ["-b/2", "0", "0", "a"]],
                    ["a", "b"],
                    {
                        "label": "hermitian_ricci",
                        "ric": _DIAG("-3*b", "0", "0", "-3*b"),
                    },
                ),
                _s(
                    "d42.omega3.J32",
                    "omega3",
                    [["a", "0", "0", "-a*b-b"], ["0", "-1", "0", "0"],
                     ["0", "b", "1", "0"], ["(a-1)/b", "0", "0", "-a"]],
                    ["a", "b"],
                    {
                        "label": "hermitian_ricci",
                        "ric": _DIAG("4*(a-1)/b", "0", "0", "4*(a-1)/b"),
                    },
                ),
                _s(
                    "d42.omega3.J33",
                    "omega3",
                    [["1", "a", "0", "a"], ["0", "1", "0", "0"],
                     ["2", "b", "-1", "a"], ["0", "-2", "0", "-1"]],
                    ["a", "b"],
                    {
                        "label": "hermitian_ricci",
                        "ric": [["0", "0", "0", "0"], ["1", "0", "0", "0"],
                                ["0", "0", "0", "0"], ["0", "0", "-1", "0"]],
                    },
                ),
                _s(
                    "d42.omega3.J34",
                    "omega3",
                    [["1", "a", "0", "-a"], ["0", "1", "0", "0"],
                     ["-2", "b", "-1", "a"], ["0", "2", "0", "-1"]],
                    ["a", "b"],
                    {
                        "label": "hermitian_ricci",
                        "ric": [["0", "0", "0", "0"], ["-1", "0", "0", "0"],
                                ["0", "0", "0", "0"], ["0", "0", "1", "0"]],
                    },
                ),
                _s(
                    "d42.omega3.J35",
                    "omega3",
                    [["0", "a", "1", "b"], ["0", "0", "0", "-1"],
                     ["1", "b", "0", "a"], ["0", "-1", "0", "0"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "d42.omega3.J36",
                    "omega3",
                    [["-1", "0", "0", "0"], ["a", "1", "a", "0"],
                     ["0", "0", "-1", "0"], ["a", "0", "a", "1"]],
                    ["a"],
                    {
                        "label": "hermitian_ricci",
                        "ric": [["3*a", "0", "-3*a/2", "0"],
                                ["0", "0", "0", "-3*a/2"],
                                ["3*a/2", "0", "0", "0"],
                                ["0", "3*a/2", "0", "3*a"]],
                    },
                ),
                _s(
                    "d42.omega3.J37",
                    "omega3",
                    [["-1", "0", "0", "0"], ["a", "1", "-a", "0"],
                     ["0", "0", "-1", "0"], ["-a", "0", "a", "1"]],
                    ["a"],
                    {
                        "label": "hermitian_ricci",
                        "ric": [["-3*a", "0", "-3*a/2", "0"],
                                ["0", "0", "0", "-3*a/2"],
                                ["3*a/2", "0", "0", "0"],
                                ["0", "3*a/2", "0", "-3*a"]],
                    },
                ),
                _s(
                    "d42.omega3.J38",
                    "omega3",
                    [["a-1", "b", "a", "-2*b*(a-2)/a"],
                     ["a^2/(2*b)", "a/2+1", "a^2/(2*b)", "-a"],
                     ["-a/2", "-(b*a+4*b)/(2*a)", "-a/2-1", "b"],
                     ["a^2/(2*b)", "a/2", "a^2/(2*b)", "-a+1"]],
                    ["a", "b"],
                    {
                        "label": "hermitian_ricci",
                        "ric": [["3*a^2/(2*b)", "0", "-3*a^2/(4*b)", "0"],
                                ["-3*a/4", "0", "0", "-3*a^2/(4*b)"],
                                ["3*a^2/(4*b)", "0", "0", "0"],
                                ["0", "3*a^2/(4*b)", "3*a/4", "3*a^2/(2*b)"]],
                    },
                ),
                _s(
                    "d42.omega3.J39",
                    "omega3",
                    [["-a-1", "b", "a", "2*b*(a+2)/a"],
                     ["a^2/(2*b)", "-a/2+1", "-a^2/(2*b)", "-a"],
                     ["-a/2", "-(-b*a+4*b)/(2*a)", "a/2-1", "b"],
                     ["-a^2/(2*b)", "a/2", "a^2/(2*b)", "a+1"]],
                    ["a", "b"],
                    {
                        "label": "hermitian_ricci",
                        "ric": [["-3*a^2/(2*b)", "0", "-3*a^2/(4*b)", "0"],
                                ["-3*a/4", "0", "0", "-3*a^2/(4*b)"],
                                ["3*a^2/(4*b)", "0", "0", "0"],
                                ["0", "3*a^2/(4*b)", "3*a/4", "-3*a^2/(2*b)"]],
                    },
                ),
            ],
        ),
        _alg(
            "d4lam",
            4,
            [_p("lam", "open-interval", lo="1/2", excluded=["1", "2"])],
            [[1, 2, 3, "1"], [1, 4, 1, "-lam"], [2, 4, 2, "lam-1"], [3, 4, 3, "-1"]],
            [{"id": "omega", "terms": [[1, 2, "1"], [3, 4, "-1"]]}],
            [
                _s(
                    "d4lam.omega.J1",
                    "omega",
                    [["1", "a", "0", "0"], ["0", "-1", "0", "0"],
                     ["0", "0", "-1", "b"], ["0", "0", "0", "1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "d4lam.omega.J2",
                    "omega",
                    [["1", "0", "0", "0"], ["a", "-1", "0", "0"],
                     ["0", "0", "1", "b"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "d4lam.omega.J3",
                    "omega",
                    [["1", "0", "0", "0"], ["0", "-1", "0", "0"],
                     ["0", "0", "a", "-(a^2-1)/b"], ["0", "0", "b", "-a"]],
                    ["a", "b"],
                    {"label": "einstein", "einstein_factor": "-3*b/2"},
                ),
            ],
        ),
        _alg(
            "h4",
            4,
            [],
            [[1, 2, 3, "1"], [1, 4, 1, "-1/2"], [2, 4, 1, "-1"],
             [2, 4, 2, "-1/2"], [3, 4, 3, "-1"]],
            [
                {"id": "omegap", "terms": [[1, 2, "1"], [3, 4, "-1"]]},
                {"id": "omegam", "terms": [[1, 2, "-1"], [3, 4, "1"]]},
            ],
            [
                _s(
                    "h4.omegap.J",
                    "omegap",
                    [["-1", "a", "0", "0"], ["0", "1", "0", "0"],
                     ["0", "0", "1", "b"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                ),
                _s(
                    "h4.omegam.J",
                    "omegam",
                    [["-1", "a", "0", "0"], ["0", "1", "0", "0"],
                     ["0", "0", "1", "b"], ["0", "0", "0", "-1"]],
                    ["a", "b"],
                    {"label": "ricci_flat"},
                    variant=True,
                    note="opposite-sign form sharing the same J",
                ),
            ],
        ),
        _alg(
            "rn4",
            4,
            [],
            [],
            [{"id": "omega", "terms": [[1, 2, "1"], [3, 4, "1"]]}],
            [
                _s(
                    "rn4.omega.J",
                    "omega",
                    [["1", "0", "0", "0"], ["0", "-1", "0", "0"],
                     ["0", "0", "1", "0"], ["0", "0", "0", "-1"]],
                    [],
                    {"label": "flat"},
                    note="one representative witness; every compatible J is flat",
                ),
            ],
        ),
    ]
}
