"""Builds the labeled 50-case fixture corpus under tests/fixtures/corpus.

Every case is a GeeksforGeeks-style pair: a Java class holding ``f_gold``
plus ``main``, and a Python module holding ``f_gold`` plus an
``if __name__`` test block.  Program features line up with the labels:
the 19 J2P type-sensitivity cases take array parameters, the 6 loop
conversion cases hold complex for loops, the 2 P2J type-sensitivity cases
take ``arr1``/``arr2``.

Run ``python3 tests/corpus_gen.py`` to regenerate.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path

ROOT = Path(__file__).parent / "fixtures" / "corpus"

J2P_COUNTS = {"AdditionalContext": 9, "LoopConversion": 6, "TypeSensitivity": 19, "ExtraConstraints": 0,
              "Miscellaneous": 7, "MostlyCorrect": 11}
P2J_COUNTS = {"AdditionalContext": 19, "LoopConversion": 0, "TypeSensitivity": 2, "ExtraConstraints": 25,
              "Miscellaneous": 8, "MostlyCorrect": 9}


@dataclass
class Program:
    java: str  # the f_gold method, 4-space indented body
    python: str
    java_call: str  # main's argument list
    python_call: str
    array: bool = False
    complex_for: bool = False
    arr_pair: bool = False
    conditional: bool = True


def _count_if(cmp: str, name: str) -> Program:
    return Program(
        f"""static int f_gold ( int {name} [ ] , int n , int x ) {{
    int count = 0 ;
    for ( int i = 0 ; i < n ; i ++ ) {{
        if ( {name} [ i ] {cmp} x ) {{
            count ++ ;
        }}
    }}
    return count ;
}}""",
        f"""def f_gold ( {name} , n , x ) :
    count = 0
    for i in range ( n ) :
        if ( {name} [ i ] {cmp} x ) :
            count += 1
    return count""",
        "new int [ ] { 4 , 8 , 1 , 9 , 4 } , 5 , 4",
        "[ 4 , 8 , 1 , 9 , 4 ] , 5 , 4",
        array=True,
    )


def _extreme(better: str, name: str) -> Program:
    return Program(
        f"""static int f_gold ( int {name} [ ] , int n ) {{
    int best = {name} [ 0 ] ;
    for ( int i = 1 ; i < n ; i ++ ) {{
        if ( {name} [ i ] {better} best ) {{
            best = {name} [ i ] ;
        }}
    }}
    return best ;
}}""",
        f"""def f_gold ( {name} , n ) :
    best = {name} [ 0 ]
    for i in range ( 1 , n ) :
        if ( {name} [ i ] {better} best ) :
            best = {name} [ i ]
    return best""",
        "new int [ ] { 3 , 11 , 2 , 7 } , 4",
        "[ 3 , 11 , 2 , 7 ] , 4",
        array=True,
    )


def _weighted_sum(k: int) -> Program:
    return Program(
        f"""static int f_gold ( int a [ ] ) {{
    int s = 0 ;
    for ( int i = 0 ; i < a . length ; i ++ ) {{
        s += a [ i ] * {k} ;
    }}
    return s ;
}}""",
        f"""def f_gold ( a ) :
    s = 0
    for i in range ( len ( a ) ) :
        s += a [ i ] * {k}
    return s""",
        "new int [ ] { 1 , 2 , 3 }",
        "[ 1 , 2 , 3 ]",
        array=True,
        conditional=False,
    )


def _bump_total(k: int) -> Program:
    return Program(
        f"""static int f_gold ( int arr [ ] , int n ) {{
    for ( int i = 0 ; i < n ; i ++ ) {{
        arr [ i ] += {k} ;
    }}
    int s = 0 ;
    for ( int v : arr ) {{
        s += v ;
    }}
    return s ;
}}""",
        f"""def f_gold ( arr , n ) :
    for i in range ( n ) :
        arr [ i ] += {k}
    s = 0
    for v in arr :
        s += v
    return s""",
        "new int [ ] { 5 , 6 , 7 } , 3",
        "[ 5 , 6 , 7 ] , 3",
        array=True,
        conditional=False,
    )


def _mirror(name: str) -> Program:
    return Program(
        f"""static boolean f_gold ( int {name} [ ] , int n ) {{
    for ( int i = 0 , j = n - 1 ; i < j ; i ++ , j -- ) {{
        if ( {name} [ i ] != {name} [ j ] ) {{
            return false ;
        }}
    }}
    return true ;
}}""",
        f"""def f_gold ( {name} , n ) :
    i = 0
    j = n - 1
    while ( i < j ) :
        if ( {name} [ i ] != {name} [ j ] ) :
            return False
        i += 1
        j -= 1
    return True""",
        "new int [ ] { 1 , 2 , 1 } , 3",
        "[ 1 , 2 , 1 ] , 3",
        array=True,
        complex_for=True,
    )


def _merge_kth() -> Program:
    return Program(
        """static int f_gold ( int arr1 [ ] , int arr2 [ ] , int m , int n , int k ) {
    int sorted1 [ ] = new int [ m + n ] ;
    int i = 0 , j = 0 , d = 0 ;
    while ( i < m && j < n ) {
        if ( arr1 [ i ] < arr2 [ j ] ) {
            sorted1 [ d ++ ] = arr1 [ i ++ ] ;
        } else {
            sorted1 [ d ++ ] = arr2 [ j ++ ] ;
        }
    }
    while ( i < m ) {
        sorted1 [ d ++ ] = arr1 [ i ++ ] ;
    }
    while ( j < n ) {
        sorted1 [ d ++ ] = arr2 [ j ++ ] ;
    }
    return sorted1 [ k - 1 ] ;
}""",
        """def f_gold ( arr1 , arr2 , m , n , k ) :
    sorted1 = [ 0 ] * ( m + n )
    i = 0
    j = 0
    d = 0
    while ( i < m and j < n ) :
        if ( arr1 [ i ] < arr2 [ j ] ) :
            sorted1 [ d ] = arr1 [ i ]
            i += 1
        else :
            sorted1 [ d ] = arr2 [ j ]
            j += 1
        d += 1
    while ( i < m ) :
        sorted1 [ d ] = arr1 [ i ]
        d += 1
        i += 1
    while ( j < n ) :
        sorted1 [ d ] = arr2 [ j ]
        d += 1
        j += 1
    return sorted1 [ k - 1 ]""",
        "new int [ ] { 2 , 3 , 6 } , new int [ ] { 1 , 4 } , 3 , 2 , 4",
        "[ 2 , 3 , 6 ] , [ 1 , 4 ] , 3 , 2 , 4",
        array=True,
        arr_pair=True,
    )


def _gap_sum() -> Program:
    return Program(
        """static int f_gold ( int arr1 [ ] , int arr2 [ ] , int n ) {
    int s = 0 ;
    for ( int i = 0 ; i < n ; i ++ ) {
        if ( arr1 [ i ] > arr2 [ i ] ) {
            s += arr1 [ i ] - arr2 [ i ] ;
        }
    }
    return s ;
}""",
        """def f_gold ( arr1 , arr2 , n ) :
    s = 0
    for i in range ( n ) :
        if ( arr1 [ i ] > arr2 [ i ] ) :
            s += arr1 [ i ] - arr2 [ i ]
    return s""",
        "new int [ ] { 5 , 1 , 7 } , new int [ ] { 2 , 3 , 4 } , 3",
        "[ 5 , 1 , 7 ] , [ 2 , 3 , 4 ] , 3",
        array=True,
        arr_pair=True,
    )


def _digit_sum_for(base: int) -> Program:
    return Program(
        f"""static int f_gold ( int n ) {{
    int sum = 0 ;
    for ( int x = n ; x > 0 ; x = x / {base} ) {{
        sum = sum + x % {base} ;
    }}
    return sum ;
}}""",
        f"""def f_gold ( n ) :
    sum = 0
    x = n
    while ( x > 0 ) :
        sum = sum + x % {base}
        x = x // {base}
    return sum""",
        "1234",
        "1234",
        complex_for=True,
    )


def _divisor_pairs() -> Program:
    return Program(
        """static int f_gold ( int n ) {
    int c = 0 ;
    for ( int i = 1 , j = n ; i <= j ; i ++ , j -- ) {
        if ( i * j == n ) {
            c ++ ;
        }
    }
    return c ;
}""",
        """def f_gold ( n ) :
    c = 0
    i = 1
    j = n
    while ( i <= j ) :
        if ( i * j == n ) :
            c += 1
        i += 1
        j -= 1
    return c""",
        "12",
        "12",
        complex_for=True,
    )


def _doublings() -> Program:
    return Program(
        """static int f_gold ( int n ) {
    int c = 0 ;
    for ( int p = 1 ; p <= n ; p = p * 2 ) {
        c ++ ;
    }
    return c ;
}""",
        """def f_gold ( n ) :
    c = 0
    p = 1
    while ( p <= n ) :
        c += 1
        p = p * 2
    return c""",
        "100",
        "100",
        complex_for=True,
    )


def _capped_sum(cap: int) -> Program:
    return Program(
        f"""static int f_gold ( int n ) {{
    int s = 0 ;
    for ( int i = 0 ; i < n && s < {cap} ; i ++ ) {{
        s += i ;
    }}
    return s ;
}}""",
        f"""def f_gold ( n ) :
    s = 0
    i = 0
    while ( i < n and s < {cap} ) :
        s += i
        i += 1
    return s""",
        "30",
        "30",
        complex_for=True,
    )


def _reverse_digits(mod: int) -> Program:
    return Program(
        f"""static int f_gold ( int x ) {{
    int rev = 0 ;
    while ( x != 0 ) {{
        rev = rev * {mod} + x % {mod} ;
        x = x / {mod} ;
    }}
    return rev ;
}}""",
        f"""def f_gold ( x ) :
    rev = 0
    while ( x != 0 ) :
        rev = rev * {mod} + x % {mod}
        x = x // {mod}
    return rev""",
        "1234",
        "1234",
    )


def _palindrome_number() -> Program:
    return Program(
        """static boolean f_gold ( int x ) {
    int temp = x ;
    int sm = 0 ;
    while ( x != 0 ) {
        int r = x % 10 ;
        sm = sm * 10 + r ;
        x = x / 10 ;
    }
    return ( sm == temp ) ;
}""",
        """def f_gold ( x ) :
    temp = x
    sm = 0
    while ( x != 0 ) :
        r = x % 10
        sm = sm * 10 + r
        x = x // 10
    return ( sm == temp )""",
        "121",
        "121",
    )


def _count_digits(k: int) -> Program:
    return Program(
        f"""static int f_gold ( int n ) {{
    int c = 0 ;
    while ( n > 0 ) {{
        if ( n % 10 == {k} ) {{
            c ++ ;
        }}
        n = n / 10 ;
    }}
    return c ;
}}""",
        f"""def f_gold ( n ) :
    c = 0
    while ( n > 0 ) :
        if ( n % 10 == {k} ) :
            c += 1
        n = n // 10
    return c""",
        "70707",
        "70707",
    )


def _gcd(final: str) -> Program:
    return Program(
        f"""static int f_gold ( int a , int b ) {{
    int x = a ;
    int y = b ;
    while ( y != 0 ) {{
        int t = y ;
        y = x % y ;
        x = t ;
    }}
    return {final} ;
}}""",
        f"""def f_gold ( a , b ) :
    x = a
    y = b
    while ( y != 0 ) :
        t = y
        y = x % y
        x = t
    return {final.replace(" / ", " // ")}""",
        "12 , 18",
        "12 , 18",
    )


def _triangle(op: str, py_op: str) -> Program:
    return Program(
        f"""static boolean f_gold ( int a , int b , int c ) {{
    if ( a + b <= c {op} a + c <= b {op} b + c <= a ) {{
        return false ;
    }}
    return true ;
}}""",
        f"""def f_gold ( a , b , c ) :
    if ( a + b <= c {py_op} a + c <= b {py_op} b + c <= a ) :
        return False
    return True""",
        "3 , 4 , 5",
        "3 , 4 , 5",
    )


def _sign() -> Program:
    return Program(
        """static int f_gold ( int n ) {
    if ( n > 0 ) {
        return 1 ;
    } else if ( n < 0 ) {
        return - 1 ;
    } else {
        return 0 ;
    }
}""",
        """def f_gold ( n ) :
    if ( n > 0 ) :
        return 1
    elif ( n < 0 ) :
        return - 1
    else :
        return 0""",
        "- 7",
        "- 7",
    )


def _leap() -> Program:
    return Program(
        """static boolean f_gold ( int y ) {
    if ( y % 400 == 0 || y % 4 == 0 && y % 100 != 0 ) {
        return true ;
    }
    return false ;
}""",
        """def f_gold ( y ) :
    if ( y % 400 == 0 or y % 4 == 0 and y % 100 != 0 ) :
        return True
    return False""",
        "2024",
        "2024",
    )


def _closed_form(expr_java: str, expr_py: str) -> Program:
    return Program(
        f"""static int f_gold ( int n ) {{
    return {expr_java} ;
}}""",
        f"""def f_gold ( n ) :
    return {expr_py}""",
        "10",
        "10",
        conditional=False,
    )


def _fib(start: int) -> Program:
    return Program(
        f"""static int f_gold ( int n ) {{
    int a = {start} , b = 1 ;
    for ( int i = 0 ; i < n ; i ++ ) {{
        int c = a + b ;
        a = b ;
        b = c ;
    }}
    return a ;
}}""",
        f"""def f_gold ( n ) :
    a = {start}
    b = 1
    for i in range ( n ) :
        c = a + b
        a = b
        b = c
    return a""",
        "10",
        "10",
        conditional=False,
    )


def _is_prime(lo: int) -> Program:
    return Program(
        f"""static boolean f_gold ( int n ) {{
    if ( n <= 1 ) {{
        return false ;
    }}
    for ( int i = {lo} ; i < n ; i ++ ) {{
        if ( n % i == 0 ) {{
            return false ;
        }}
    }}
    return true ;
}}""",
        f"""def f_gold ( n ) :
    if ( n <= 1 ) :
        return False
    for i in range ( {lo} , n ) :
        if ( n % i == 0 ) :
            return False
    return True""",
        "29",
        "29",
    )


def _clamp(lo: int, hi: int) -> Program:
    return Program(
        f"""static int f_gold ( int v ) {{
    if ( v < {lo} ) {{
        return {lo} ;
    }}
    if ( v > {hi} ) {{
        return {hi} ;
    }}
    return v ;
}}""",
        f"""def f_gold ( v ) :
    if ( v < {lo} ) :
        return {lo}
    if ( v > {hi} ) :
        return {hi}
    return v""",
        "42",
        "42",
    )


def programs() -> list[Program]:
    arrays = (
        [_count_if(c, "arr") for c in (">", "<", ">=", "<=", "==", "!=")]
        + [_count_if(c, "a") for c in (">", "<")]
        + [_extreme(">", "arr"), _extreme("<", "arr"), _extreme(">", "a")]
        + [_weighted_sum(k) for k in (2, 3)]
        + [_bump_total(k) for k in (1, 5)]
        + [_mirror("arr"), _mirror("a")]
        + [_merge_kth(), _gap_sum()]
    )
    loops = [_digit_sum_for(10), _divisor_pairs(), _doublings(), _capped_sum(50)]
    others = (
        [_reverse_digits(10), _reverse_digits(8), _palindrome_number()]
        + [_count_digits(k) for k in (0, 7, 3)]
        + [_gcd("x"), _gcd("a / x * b")]
        + [_triangle("||", "or"), _sign(), _leap()]
        + [_closed_form("n * ( n + 1 ) / 2", "n * ( n + 1 ) // 2"),
           _closed_form("n * n - 1", "n * n - 1"),
           _closed_form("( n % 7 ) * 3 + 1", "( n % 7 ) * 3 + 1"),
           _closed_form("n * ( 2 * n - 1 )", "n * ( 2 * n - 1 )")]
        + [_fib(0), _fib(1)]
        + [_is_prime(2), _is_prime(3)]
        + [_clamp(0, 100), _clamp(-5, 5), _clamp(1, 9)]
        + [_count_digits(5), _clamp(10, 20), _triangle("&&", "and"), _reverse_digits(2)]
        + [_closed_form("n * n * n", "n * n * n")]
    )
    progs = arrays + loops + others
    assert len(progs) == 50, len(progs)
    return progs


def _java_file(case_id: str, p: Program) -> str:
    body = "\n".join("    " + line if line else line for line in p.java.splitlines())
    return (
        "import java . util . * ;\n"
        "import java . lang . * ;\n\n"
        f"class {case_id.upper()} {{\n\n"
        f"{body}\n\n"
        "    public static void main ( String args [ ] ) {\n"
        f"        System . out . println ( f_gold ( {p.java_call} ) ) ;\n"
        "    }\n"
        "}\n"
    )


def _python_file(p: Program) -> str:
    return (
        f"{p.python}\n\n\n"
        "if __name__ == '__main__' :\n"
        f"    print ( f_gold ( {p.python_call} ) )\n"
    )


def assign_labels(progs: list[Program]) -> dict[str, dict[str, list[str]]]:
    """Deterministic labels that hit the category counts exactly."""
    ids = [f"case_{k:02d}" for k in range(len(progs))]
    labels: dict[str, dict[str, list[str]]] = {i: {"j2p": [], "p2j": []} for i in ids}

    # J2P: features drive LoopConversion and TypeSensitivity.
    rest = []
    for i, p in zip(ids, progs):
        if p.array:
            labels[i]["j2p"].append("TypeSensitivity")
        if p.complex_for:
            labels[i]["j2p"].append("LoopConversion")
        if not (p.array or p.complex_for):
            rest.append(i)
    quota = [("AdditionalContext", 9), ("Miscellaneous", 7), ("MostlyCorrect", 11)]
    it = iter(rest)
    for name, n in quota:
        for _ in range(n):
            labels[next(it)]["j2p"].append(name)

    # P2J: arr1/arr2 -> TypeSensitivity; conditionals carry ExtraConstraints.
    pool = []
    for i, p in zip(ids, progs):
        if p.arr_pair:
            labels[i]["p2j"].append("TypeSensitivity")
        else:
            pool.append((i, p))
    cond = [i for i, p in pool if p.conditional]
    plain = [i for i, p in pool if not p.conditional]
    # 13 AC+EC, 12 EC only; 6 AC only, 8 Misc, 9 MostlyCorrect from the rest
    for i in cond[:13]:
        labels[i]["p2j"] += ["AdditionalContext", "ExtraConstraints"]
    for i in cond[13:25]:
        labels[i]["p2j"].append("ExtraConstraints")
    rest = cond[25:] + plain
    for name, n in [("AdditionalContext", 6), ("Miscellaneous", 8), ("MostlyCorrect", 9)]:
        for _ in range(n):
            labels[rest.pop(0)]["p2j"].append(name)
    assert not rest, rest
    return labels


def build(root: Path = ROOT) -> None:
    progs = programs()
    (root / "java").mkdir(parents=True, exist_ok=True)
    (root / "python").mkdir(parents=True, exist_ok=True)
    for k, p in enumerate(progs):
        case_id = f"case_{k:02d}"
        (root / "java" / f"{case_id}.java").write_text(_java_file(case_id, p), encoding="utf-8")
        (root / "python" / f"{case_id}.py").write_text(_python_file(p), encoding="utf-8")
    labels = assign_labels(progs)
    (root / "labels.json").write_text(json.dumps(labels, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def counts(labels: dict, direction: str) -> dict[str, int]:
    out = {name: 0 for name in J2P_COUNTS}
    for per in labels.values():
        for name in per[direction]:
            out[name] += 1
    return out


if __name__ == "__main__":
    build(Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT)
    labels = json.loads((ROOT / "labels.json").read_text())
    assert counts(labels, "j2p") == J2P_COUNTS, counts(labels, "j2p")
    assert counts(labels, "p2j") == P2J_COUNTS, counts(labels, "p2j")
