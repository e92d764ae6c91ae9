"""Frozen command-line outputs; every entry is (argv, exit code, stdout, stderr)."""

GOLDEN = (
    (('eval', 'a*b + b*a'), 0, '1·ba + 0·b + 0·a + 1·ab\n', ''),
    (('eval', 'det(1 + a + b + 2*wedge(a,b))'), 0, '-1\n', ''),
    (('eval', 'a *'), 1, '', 'parse error: line 1, column 4: expected an expression, found end of input\n'),
    (('eval', '--format', 'matrix', 'conj(1+a+b+2*wedge(a,b), a)'), 0, '[[-2,1],[-4,2]]\n', ''),
    (('eval', '--format', 'matrix', 'e1*e2*e3'), 0, '[[1i,0],[0,1i]]\n', ''),
    (('eval', 'inverse(a)'), 2, '', 'domain error: SingularGNumber in inverse(a): det = 0.0; GNum(g11=0.0, g12=0.0, g21=1.0, g22=0.0) has no inverse\n'),
    (('eval', '--format', 'matrix', 'e2'), 0, '[[0,-1i],[1i,0]]\n', ''),
    (('eval', '--format', 'std', '1+a+b+2*wedge(a,b)'), 0, '1 + 1·e + 1·fe + 0·f\n', ''),
    (('eval', '(a+b+2*wedge(a,b))^2'), 0, '2·ba + 0·b + 0·a + 2·ab\n', ''),
    (('eval', 'classify(-ba + b - 2*a + ab)'), 0, 'Euclidean (vsq = -1, singular = false)\n', ''),
    (('eval', 'euler(-ba + b - 2*a + ab)'), 0, 'Euclidean: sign = 1, rho = 1, phi = 1.57079632679, axis = -1·ba + 1·b - 2·a + 1·ab\n', ''),
    (('eval', '--format', 'matrix', 'regrade(-ba + b - 2*a + ab)'), 0, 'BA = [[-1,1],[-2,2]]; B = [[-2,1],[-4,2]]; A = [[1,-1],[1,-1]]; AB = [[2,-1],[2,-1]]; g = [[-1,1],[-2,1]] (forward)\n', ''),
    (('eval', '--format', 'matrix', 'exp(-ba + b - 2*a + ab, pi/2)'), 0, '[[-1,1],[-2,1]]\n', ''),
    (('eval', '--format', 'matrix', 'conjugator(nilpotent(1, -4, 2))'), 0, '[[0,1],[1,2]]\n', ''),
    (('eval', '--format', 'matrix', 'eigenpotents(e)'), 0, 'Diagonalizable; lambda1 = 1; lambda2 = -1; P+ = [[0.5,0.5],[0.5,0.5]]; P- = [[0.5,-0.5],[-0.5,0.5]]; B = [[0.5,-0.5],[0.5,-0.5]]; A = [[0.5,0.5],[-0.5,-0.5]]\n', ''),
    (('eval', '--format', 'spectral', '3*ba + b + 3*ab'), 0, 'Jordan; lambda1 = 3; lambda2 = 3; n = 0·ba + 1·b + 0·a + 0·ab\n', ''),
    (('eval', 'interpret(1 + e + fe, G20)'), 0, 'G20: 1 + 1·e1 - 1·e2 + 0·e12\n', ''),
    (('eval', 'triplecross(e, e, f)'), 0, 'vec(0, 0, 1)\n', ''),
    (('eval', '--json', '--format', 'euler', 'f'), 0, '{"tag": "Euclidean", "rho": 1.0, "phi": 1.5707963267948966, "sign": 1, "axis": {"g11": 0.0, "g12": -1.0, "g21": 1.0, "g22": 0.0}}\n', ''),
    (('nullcone-map', '--family', 'parabolic'), 0, 't,A11,A12,A21,A22,B11,B12,B21,B22\n-2,-2,-4,1,2,0,1,0,0\n-1.9,-1.9,-3.61,1,1.9,0,1,0,0\n-1.8,-1.8,-3.24,1,1.8,0,1,0,0\n-1.7,-1.7,-2.89,1,1.7,0,1,0,0\n-1.6,-1.6,-2.56,1,1.6,0,1,0,0\n-1.5,-1.5,-2.25,1,1.5,0,1,0,0\n-1.4,-1.4,-1.96,1,1.4,0,1,0,0\n-1.3,-1.3,-1.69,1,1.3,0,1,0,0\n-1.2,-1.2,-1.44,1,1.2,0,1,0,0\n-1.1,-1.1,-1.21,1,1.1,0,1,0,0\n-1,-1,-1,1,1,0,1,0,0\n-0.9,-0.9,-0.81,1,0.9,0,1,0,0\n-0.8,-0.8,-0.64,1,0.8,0,1,0,0\n-0.7,-0.7,-0.49,1,0.7,0,1,0,0\n-0.6,-0.6,-0.36,1,0.6,0,1,0,0\n-0.5,-0.5,-0.25,1,0.5,0,1,0,0\n-0.4,-0.4,-0.16,1,0.4,0,1,0,0\n-0.3,-0.3,-0.09,1,0.3,0,1,0,0\n-0.2,-0.2,-0.04,1,0.2,0,1,0,0\n-0.1,-0.1,-0.01,1,0.1,0,1,0,0\n0,0,0,1,0,0,1,0,0\n0.1,0.1,-0.01,1,-0.1,0,1,0,0\n0.2,0.2,-0.04,1,-0.2,0,1,0,0\n0.3,0.3,-0.09,1,-0.3,0,1,0,0\n0.4,0.4,-0.16,1,-0.4,0,1,0,0\n0.5,0.5,-0.25,1,-0.5,0,1,0,0\n0.6,0.6,-0.36,1,-0.6,0,1,0,0\n0.7,0.7,-0.49,1,-0.7,0,1,0,0\n0.8,0.8,-0.64,1,-0.8,0,1,0,0\n0.9,0.9,-0.81,1,-0.9,0,1,0,0\n1,1,-1,1,-1,0,1,0,0\n1.1,1.1,-1.21,1,-1.1,0,1,0,0\n1.2,1.2,-1.44,1,-1.2,0,1,0,0\n1.3,1.3,-1.69,1,-1.3,0,1,0,0\n1.4,1.4,-1.96,1,-1.4,0,1,0,0\n1.5,1.5,-2.25,1,-1.5,0,1,0,0\n1.6,1.6,-2.56,1,-1.6,0,1,0,0\n1.7,1.7,-2.89,1,-1.7,0,1,0,0\n1.8,1.8,-3.24,1,-1.8,0,1,0,0\n1.9,1.9,-3.61,1,-1.9,0,1,0,0\n2,2,-4,1,-2,0,1,0,0\n', ''),
)

# (stdin, exit code, stdout, stderr) for `batch -`
BATCH_CASE = ('# recovery\nlet h = -ba + b - 2*a + ab\nh*h\ninverse(b)\nh *\ndet(h)\nfoo(h)\nlet a = 1\nhermitian(0, 1, 0, 0)\n', 2, 'h = -1·ba + 1·b - 2·a + 1·ab\n-1·ba + 0·b + 0·a - 1·ab\n1\nDiagonalizable; lambda1 = 1; lambda2 = -1; P+ = 0.5·ba + 0.5·b + 0.5·a + 0.5·ab; P- = 0.5·ba - 0.5·b - 0.5·a + 0.5·ab; B = -0.5·ba + 0.5·b - 0.5·a + 0.5·ab; A = -0.5·ba - 0.5·b + 0.5·a + 0.5·ab\n', "line 4: domain error: SingularGNumber in inverse(b): det = 0.0; GNum(g11=0.0, g12=1.0, g21=0.0, g22=0.0) has no inverse\nline 5: parse error at column 4: expected an expression, found end of input\nline 7: domain error: UnknownFunction in foo(h): no function named 'foo'\nline 8: domain error: NameCollision: cannot rebind 'a'\n")
