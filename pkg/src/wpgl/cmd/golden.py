# Golden structural data for small weight sequences, checked by `wpgl examples`.
#
# Each fixture is labelled by its weight sequence. `expected` holds only the keys
# recorded for that sequence; regenerated data is compared key by key.
#
#   k                    monomial counts k_1..k_t
#   unipotent_dimensions r_a * k_a per level
#   reductive            GL(r_1) x ... x GL(r_t), GL(1) printed Gm
#   pi0_shape            structural label of the component group
#   pi1_order            gcd of the weights
#   action_matrices      conjugation of a generic element of U_a on U_b, rows as strings
#   torus_exponents      character of the block-scalar torus on each basis coordinate of U
#   torus_instance       coordinates of diag(lambda) o u o diag(lambda)^-1 for a fixed lambda and u
#
# `case` names the worked weight-sequence case a fixture was checked against by hand.

GOLDEN = [
    {
        "name": "weights-2-3",
        "case": "two weights, m < n, m does not divide n",
        "weights": [2, 3],
        "records": "m < n, m does not divide n: no unipotent part, two-dimensional torus",
        "expected": {
            "k": [0, 0],
            "unipotent_dimensions": [0, 0],
            "reductive": "Gm x Gm",
            "pi0_shape": "Gm",
            "pi1_order": 1,
            "torus_exponents": [],
        },
    },
    {
        "name": "weights-2-4",
        "case": "two weights, m < n, m divides n",
        "weights": [2, 4],
        "records": "m < n, m divides n: one unipotent coordinate scaled by lambda_2 * lambda_1^(-n/m)",
        "expected": {
            "k": [0, 1],
            "unipotent_dimensions": [0, 1],
            "reductive": "Gm x Gm",
            "pi0_shape": "A x| Gm",
            "pi1_order": 2,
            "torus_exponents": [{"level": 2, "coordinate": "x_1_1^2", "exponents": [-2, 1]}],
        },
    },
    {
        "name": "weights-1-3",
        "case": "two weights, m < n, m divides n",
        "weights": [1, 3],
        "records": "m < n, m divides n with n/m = 3",
        "expected": {
            "k": [0, 1],
            "pi0_shape": "A x| Gm",
            "pi1_order": 1,
            "torus_exponents": [{"level": 2, "coordinate": "x_1_1^3", "exponents": [-3, 1]}],
        },
    },
    {
        "name": "weights-5-5",
        "case": "two equal weights",
        "weights": [5, 5],
        "records": "equal weights: the group is GL(2), components PGL(2), kernel of order 5",
        "expected": {
            "k": [0],
            "unipotent_dimensions": [0],
            "reductive": "GL(2)",
            "pi0_shape": "PGL(2)",
            "tag": "PGL(2)",
            "pi1_order": 5,
        },
    },
    {
        "name": "weights-3-3",
        "case": "two equal weights",
        "weights": [3, 3],
        "records": "equal weights with k = 3",
        "expected": {
            "reductive": "GL(2)",
            "pi0_shape": "PGL(2)",
            "pi1_order": 3,
        },
    },
    {
        "name": "weights-1-2-3",
        "case": "weights 1, 2, 3",
        "weights": [1, 2, 3],
        "records": "general element (x, y+a*x^2, z+b*x^3+c*x*y); U_2 acts on U_3 by (b, c) -> (b - a*c, c)",
        "note": "the xy coordinate is scaled by lambda_1^-1 lambda_2^-1 lambda_3, since x*y has weight 1 + 2",
        "expected": {
            "k": [0, 1, 2],
            "unipotent_dimensions": [0, 1, 2],
            "reductive": "Gm x Gm x Gm",
            "pi0_shape": "U x| Gm^2",
            "pi1_order": 1,
            "action_matrices": [
                {
                    "acting_level": 2,
                    "acted_level": 3,
                    "acting": ["a"],
                    "basis": ["x_1_1^3", "x_1_1*x_2_1"],
                    "rows": [["1", "-a"], ["0", "1"]],
                },
            ],
            "torus_exponents": [
                {"level": 2, "coordinate": "x_1_1^2", "exponents": [-2, 1, 0]},
                {"level": 3, "coordinate": "x_1_1^3", "exponents": [-3, 0, 1]},
                {"level": 3, "coordinate": "x_1_1*x_2_1", "exponents": [-1, -1, 1]},
            ],
            "torus_instance": {"lambda": [2, 1, 1], "coordinates": [1, 1, 1], "image": ["1/4", "1/8", "1/2"]},
        },
    },
    {
        "name": "weights-1-2-4",
        "case": "weights 1, 2, 4",
        "weights": [1, 2, 4],
        "records": "general element (x, y+a*x^2, z+b*x^4+c*x^2*y+d*y^2); U_2 acts on U_3 = A^3 unipotently",
        "expected": {
            "k": [0, 1, 3],
            "unipotent_dimensions": [0, 1, 3],
            "reductive": "Gm x Gm x Gm",
            "pi0_shape": "U x| Gm^2",
            "pi1_order": 1,
            "action_matrices": [
                {
                    "acting_level": 2,
                    "acted_level": 3,
                    "acting": ["a"],
                    "basis": ["x_1_1^4", "x_1_1^2*x_2_1", "x_2_1^2"],
                    "rows": [["1", "-a", "a^2"], ["0", "1", "-2*a"], ["0", "0", "1"]],
                },
            ],
            "torus_exponents": [
                {"level": 2, "coordinate": "x_1_1^2", "exponents": [-2, 1, 0]},
                {"level": 3, "coordinate": "x_1_1^4", "exponents": [-4, 0, 1]},
                {"level": 3, "coordinate": "x_1_1^2*x_2_1", "exponents": [-2, -1, 1]},
                {"level": 3, "coordinate": "x_2_1^2", "exponents": [0, -2, 1]},
            ],
        },
    },
]
