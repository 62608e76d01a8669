"""Transcribed positive geometric crystal data for C_n^(1), n = 2, 3, 4.

Every entry is text in the grammar of :mod:`affcrystal.expr`.  ``shared``
holds named subexpressions; the variable ``c`` is the action parameter.
Coordinates follow the order of the reduced words of t(varpi_n) and
t(varpi_n check) (``XCOORDS`` / ``YCOORDS``).
"""

XCOORDS = {
    2: ("x22", "x11", "x21"),
    3: ("x33", "x22", "x32", "x11", "x21", "x31"),
    4: ("x44", "x33", "x43", "x22", "x32", "x42", "x11", "x21", "x31", "x41"),
}

YCOORDS = {
    2: ("y02", "y11", "y01"),
    3: ("y03", "y12", "y02", "y21", "y11", "y01"),
    4: ("y04", "y13", "y03", "y22", "y12", "y02", "y31", "y21", "y11", "y01"),
}

# x-chart: e_i^c, eps_i, gamma_i for i = 0..n (e_0 is the closed form)
X_SIDE = {
    2: dict(
        shared="""
            let c2 = (c*x21*x22 + x11^2)/(x21*x22 + x11^2);
        """,
        e={
            0: ("c2/c*x22", "x11/c", "x21/c2"),
            # displayed once with the outer slots swapped; every later use reads this way
            1: ("x22", "c*x11", "x21"),
            2: ("c2*x22", "x11", "c/c2*x21"),
        },
        eps={
            0: "x21 + x11^2/x22",
            1: "x22/x11",
            2: "(x21*x22 + x11^2)/(x22^2*x21)",
        },
        gamma={
            0: "1/x11^2",
            1: "x11^2/(x21*x22)",
            2: "x21^2*x22^2/x11^2",
        },
    ),
    3: dict(
        shared="""
            let c2 = (c*x21*x22 + x32*x11)/(x21*x22 + x32*x11);
            let c3 = x32^2*x31*x33 + x22^2*x31*x32 + x22^2*x21^2;
            let c31 = c*x32^2*x31*x33 + x22^2*x31*x32 + x22^2*x21^2;
            let c32 = c*x32^2*x31*x33 + c*x22^2*x31*x32 + x22^2*x21^2;
            let q2 = x31 + x21^2/x32 + 2*x21*x11/x22 + x11^2*x32/x22^2 + x11^2/x33;
            let q21 = c*x31 + x21^2/x32 + 2*x21*x11/x22 + x11^2*x32/x22^2 + x11^2/x33;
            let q24 = c*x31 + c*x21^2/x32 + c*2*x21*x11/x22 + c*x11^2*x32/x22^2 + x11^2/x33;
            let s = x21*x22 + x11*x32;
            let t = x21*x22*q24 + x11*x32*q21;
        """,
        e={
            0: ("q24/(c*q2)*x33", "x22*t/(s*c*q2)", "q21/q24*x32",
                "x11/c", "x21*s*q2/t", "q2/q21*x31"),
            1: ("x33", "x22", "x32", "c*x11", "x21", "x31"),
            2: ("x33", "c2*x22", "x32", "x11", "c/c2*x21", "x31"),
            3: ("c31/c3*x33", "x22", "c32/c31*x32", "x11", "x21", "c*c3/c32*x31"),
        },
        eps={
            0: "x31 + (x21*x22 + x11*x32)^2/(x22^2*x32) + x11^2/x33",
            1: "x22/x11",
            2: "(x33*x22*x21 + x33*x32*x11)/(x22^2*x21)",
            3: "(x33*x32^2*x31 + x22^2*x32*x31 + x22^2*x21^2)/(x33^2*x32^2*x31)",
        },
        gamma={
            0: "1/x11^2",
            1: "x11^2/(x21*x22)",
            2: "x21^2*x22^2/(x31*x32*x33*x11)",
            3: "x31^2*x32^2*x33^2/(x21^2*x22^2)",
        },
    ),
    4: dict(
        shared="""
            let c2 = x22*x21 + x32*x11;
            let c21 = c*x22*x21 + x32*x11;
            let c3 = x44*x33*x32^2*x31 + x44*x43*x22*x32*x31 + x44*x43*x42*x22*x21;
            let c31 = c*x44*x33*x32^2*x31 + x44*x43*x22*x32*x31 + x44*x43*x42*x22*x21;
            let c32 = c*x44*x33*x32^2*x31 + c*x44*x43*x22*x32*x31 + x44*x43*x42*x22*x21;
            let c4 = x41*x42^2*x43^2*x44 + x33^2*x43*x42^2*x41 + x33^2*x32^2*x42*x41
                   + x33^2*x32^2*x31^2;
            let c41 = c*x41*x42^2*x43^2*x44 + x33^2*x43*x42^2*x41 + x33^2*x32^2*x42*x41
                    + x33^2*x32^2*x31^2;
            let c42 = c*x41*x42^2*x43^2*x44 + c*x33^2*x43*x42^2*x41 + x33^2*x32^2*x42*x41
                    + x33^2*x32^2*x31^2;
            let c43 = c*x41*x42^2*x43^2*x44 + c*x33^2*x43*x42^2*x41 + c*x33^2*x32^2*x42*x41
                    + x33^2*x32^2*x31^2;
            let u = (x11*x42/x22 + x21*x42/x32 + x31)^2/x42;
            let v = (x21 + x11*x43/x33 + x11*x32/x22)^2/x43;
            let q4 = x41 + u + v + x11^2/x44;
            let q41 = c*x41 + u + v + x11^2/x44;
            let q42 = c*x41 + c*u + v + x11^2/x44;
            let q43 = c*x41 + c*u + c*v + x11^2/x44;
            let A = x11*x22*x43*q42 + q43*x21*x22*x33 + q43*x11*x32*x33;
            let B = x11*x22*x43 + x21*x22*x33 + x11*x32*x33;
            let C = q41*x11*x32*x42 + q41*x21*x22*x42 + q42*x22*x31*x32;
            let D = x11*x32*x42 + x21*x22*x42 + x22*x31*x32;
            let G = q41*(x11^2*x22*x32*x42*x43 + x11^2*x32^2*x33*x42 + x11*x21*x22*x32*x33*x42)
                  + q42*(x11*x21*x22^2*x42*x43 + x11*x22^2*x31*x32*x43 + x11*x22*x31*x32^2*x33)
                  + q43*(x11*x21*x22*x32*x33*x42 + x21^2*x22^2*x33*x42 + x21*x22^2*x31*x32*x33);
        """,
        e={
            0: ("x44*q43/(c*q4)", "x33*A/(c*q4*B)", "x43*q42/q43", "x22*G/(B*D*c*q4)",
                "x32*C*B/(A*D)", "q41*x42/q42", "x11/c", "x21*q4*D*B/G", "x31*q4*D/C",
                "x41*q4/q41"),
            1: ("x44", "x33", "x43", "x22", "x32", "x42", "c*x11", "x21", "x31", "x41"),
            2: ("x44", "x33", "x43", "c21/c2*x22", "x32", "x42", "x11", "c*c2/c21*x21",
                "x31", "x41"),
            3: ("x44", "c31/c3*x33", "x43", "x22", "c32/c31*x32", "x42", "x11", "x21",
                "c*c3/c32*x31", "x41"),
            4: ("c41/c4*x44", "x33", "c42/c41*x43", "x22", "x32", "c43/c42*x42", "x11",
                "x21", "x31", "c*c4/c43*x41"),
        },
        eps={
            0: "q4",
            1: "x22/x11",
            2: "x33/x22 + x33*x32*x11/(x22^2*x21)",
            3: "x44/x33 + x44*x43*x22/(x33^2*x32) + x44*x43*x42*x22*x21/(x33^2*x32^2*x31)",
            4: "1/x44 + x33^2/(x43*x44^2) + x33^2*x32^2/(x44^2*x43^2*x42)"
               " + x33^2*x32^2*x31^2/(x44^2*x43^2*x42^2*x41)",
        },
        gamma={
            0: "1/x11^2",
            1: "x11^2/(x21*x22)",
            2: "x21^2*x22^2/(x11*x31*x32*x33)",
            3: "x31^2*x32^2*x33^2/(x21*x22*x41*x42*x43*x44)",
            4: "x41^2*x42^2*x43^2*x44^2/(x31^2*x32^2*x33^2)",
        },
    ),
}

# y-chart: the 0-structure
Y_SIDE = {
    2: dict(
        shared="let cb = (c*y01*y02 + y11^2)/(y01*y02 + y11^2);",
        e0=("cb*y02", "y11", "c*y01/cb"),
        eps0="(y01*y02 + y11^2)/(y02^2*y01)",
        gamma0="y01^2*y02^2/y11^2",
    ),
    3: dict(
        shared="""
            let c0 = y03*y02^2*y01 + y12^2*y02*y01 + y12^2*y11^2;
            let c01 = c*y03*y02^2*y01 + y12^2*y02*y01 + y12^2*y11^2;
            let c02 = c*y03*y02^2*y01 + c*y12^2*y02*y01 + y12^2*y11^2;
        """,
        e0=("c01/c0*y03", "y12", "c02/c01*y02", "y21", "y11", "c*c0/c02*y01"),
        eps0="c0/(y03^2*y02^2*y01)",
        gamma0="y01^2*y02^2*y03^2/(y11^2*y12^2)",
    ),
    4: dict(
        shared="""
            let t1 = 1/y04;
            let t2 = y13^2/(y04^2*y03);
            let t3 = y13^2*y12^2/(y04^2*y03^2*y02);
            let t4 = y13^2*y12^2*y11^2/(y04^2*y03^2*y02^2*y01);
            let c0 = t1 + t2 + t3 + t4;
            let c01 = c*t1 + t2 + t3 + t4;
            let c02 = c*t1 + c*t2 + t3 + t4;
            let c03 = c*t1 + c*t2 + c*t3 + t4;
        """,
        e0=("c01/c0*y04", "y13", "c02/c01*y03", "y22", "y12", "c03/c02*y02", "y31", "y21",
            "y11", "c*c0/c03*y01"),
        eps0="c0",
        gamma0="y01^2*y02^2*y03^2*y04^2/(y11^2*y12^2*y13^2)",
    ),
}

# sigma-bar: y in terms of x (YCOORDS order) and its inverse (XCOORDS order)
SIGMA = {
    2: ("1/x21", "x11/(x21*x22)", "1/x22"),
    3: ("1/x31", "(x21*x22 + x11*x32)/(x31*x32*x22)", "1/x32",
        "x21*x22/(x31*x32*x33)", "x11*x22/(x33*(x21*x22 + x11*x32))", "1/x33"),
    # n = 4 is not printed; solved from V1(x) a(x) = V2(y), unique positive solution
    4: None,
}

SIGMA4_SHARED = """
    let X4 = x41*x42*x43*x44;
    let B = x11*x22*x43 + x21*x22*x33 + x11*x32*x33;
    let D = x11*x32*x42 + x21*x22*x42 + x22*x31*x32;
    let y13 = D/(x22*x32*x41*x42);
    let y12 = x32*B/(x33*x43*D);
    let y22 = (x21*x22*x42*x43 + x22*x31*x32*x43 + x31*x32^2*x33)/(x32*x33*x41*x42*x43);
"""
SIGMA[4] = ("1/x41", "y13", "1/x42", "y22", "y12", "1/x43", "x31*x32*x33/X4",
            "x21*x22/(X4*y22)", "x11/(X4*y12*y13)", "1/x44")

SIGMA_INV = {
    2: ("1/y01", "y11/(y01*y02)", "1/y02"),
    3: ("1/y01", "(y21*y02 + y11*y12)/(y01*y02*y12)", "1/y02",
        "y11*y12/(y01*y02*y03)", "y21*y12/(y03*(y21*y02 + y11*y12))", "1/y03"),
    4: ("1/y01",
        "(y31*y02*y12 + y21*y22*y02 + y11*y12*y22)/(y12*y22*y01*y02)",
        "1/y02",
        "(y21*y22*y02*y03 + y11*y12*y22*y03 + y11*y12^2*y13)/(y12*y13*y01*y02*y03)",
        "(y31*y03*y22 + y31*y12*y13 + y21*y22*y13)*y12"
        "/(y03*y13*(y31*y02*y12 + y21*y22*y02 + y11*y12*y22))",
        "1/y03",
        "y11*y12*y13/(y01*y02*y03*y04)",
        "y21*y22*y12*y13/(y04*(y21*y22*y02*y03 + y11*y12*y22*y03 + y11*y12^2*y13))",
        "y31*y22*y13/(y04*(y31*y03*y22 + y31*y12*y13 + y21*y22*y13))",
        "1/y04"),
}

# printed coefficients of V1(x) and V2(y); keys are signed tableaux
V1_COEFFS = {
    2: {
        (1, 2): "x21*x22",
        (1, -2): "x21 + x11^2/x22",
        (2, -2): "x11",
        (2, -1): "x22",
        (-2, -1): "1",
    },
    3: {
        (1, 2, 3): "x31*x32*x33",
        (1, 2, -3): "x31*x32 + x31*x22^2/x33 + x21^2*x22^2/(x32*x33)",
        (1, 3, -3): "x21*x11 + x21^2*x22/x32 + x31*x22",
        (1, 3, -2): "(x11^2*x32/x22^2 + x31 + x21^2/x32 + 2*x21*x11/x22)*x33",
        (1, -3, -2): "x11^2*x32/x22^2 + x31 + x21^2/x32 + 2*x21*x11/x22 + x11^2/x33",
        (2, 3, -3): "x21*x22",
        (2, 3, -2): "(x21 + x11*x32/x22)*x33",
        (2, -3, -2): "x21 + x11*x32/x22 + x11*x22/x33",
        (2, 3, -1): "x32*x33",
        (2, -3, -1): "x32 + x22^2/x33",
        (3, -3, -2): "x11",
        (3, -3, -1): "x22",
        (3, -2, -1): "x33",
        (-3, -2, -1): "1",
    },
}

V2_COEFFS = {
    2: {
        (-2, -1): "y01*y02",
        (1, -2): "y01 + y11^2/y02",
        (2, -2): "y11",
        (2, -1): "y02",
        (1, 2): "1",
    },
    3: {
        (-3, -2, -1): "y01*y02*y03",
        (1, -3, -2): "y01*y02 + y01*y12^2/y03 + y11^2*y12^2/(y02*y03)",
        (2, -3, -2): "y11*y21 + y01*y12 + y11^2*y12/y02",
        (2, -3, -1): "(2*y11*y21/y12 + y01 + y11^2/y02 + y21^2*y02/y12^2)*y03",
        (1, 2, -3): "2*y11*y21/y12 + y01 + y11^2/y02 + y21^2*y02/y12^2 + y21^2/y03",
        (3, -3, -2): "y11*y12",
        (3, -3, -1): "(y11 + y21*y02/y12)*y03",
        (1, 3, -3): "y21*y12/y03 + y11 + y21*y02/y12",
        (2, 3, -3): "y21",
        (3, -2, -1): "y02*y03",
        (1, 3, -2): "y02 + y12^2/y03",
        (2, 3, -2): "y12",
        (2, 3, -1): "y03",
        (1, 2, 3): "1",
    },
}
