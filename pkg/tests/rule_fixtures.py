"""Hand-written fixture corpus: for every rule, at least two programs
that trigger it (with the exact lines) and two that must not.

`expected` holds one entry per expected mistake of the target rule:
a line number for anchored rules, None for program-level rules.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RuleFixture:
    name: str
    language: str
    rule: str
    source: str
    expected: tuple[int | None, ...]


def _py(name: str, rule: str, source: str, *expected: int | None) -> RuleFixture:
    return RuleFixture(name, "python", rule, source, expected)


def _jv(name: str, rule: str, source: str, *expected: int | None) -> RuleFixture:
    return RuleFixture(name, "java", rule, source, expected)


PYTHON_FIXTURES = [
    # PY01 - global statements
    _py("PY01-pos-single", "PY01",
        "def record(won):\n"
        "    global score\n"
        "    score += 1\n", 2),
    _py("PY01-pos-multi-name", "PY01",
        "def bump():\n"
        "    global a, b\n"
        "    a = b\n", 2, 2),
    _py("PY01-neg-module-level", "PY01",
        "global config\n"
        "config = 1\n"),
    _py("PY01-neg-parameters", "PY01",
        "def add(a, b):\n"
        "    return a + b\n"),
    # PY02 - break statements
    _py("PY02-pos-for", "PY02",
        "def find(xs):\n"
        "    for x in xs:\n"
        "        break\n", 3),
    _py("PY02-pos-two-loops", "PY02",
        "def scan(n):\n"
        "    while n:\n"
        "        break\n"
        "    for i in n:\n"
        "        break\n", 3, 5),
    _py("PY02-neg-module-loop", "PY02",
        "for x in xs:\n"
        "    break\n"),
    _py("PY02-neg-plain-loop", "PY02",
        "def total(xs):\n"
        "    t = 0\n"
        "    for x in xs:\n"
        "        t += x\n"
        "    return t\n"),
    # PY03 - continue statements
    _py("PY03-pos-for", "PY03",
        "def skip(xs):\n"
        "    for x in xs:\n"
        "        continue\n", 3),
    _py("PY03-pos-nested-if", "PY03",
        "def skip(xs):\n"
        "    for x in xs:\n"
        "        if x:\n"
        "            continue\n", 4),
    _py("PY03-neg-module-loop", "PY03",
        "for x in xs:\n"
        "    continue\n"),
    _py("PY03-neg-none", "PY03",
        "def walk(xs):\n"
        "    for x in xs:\n"
        "        print(x)\n"),
    # PY04 - pass statements
    _py("PY04-pos-body", "PY04",
        "def todo():\n"
        "    pass\n", 2),
    _py("PY04-pos-branch", "PY04",
        "def check(x):\n"
        "    if x:\n"
        "        pass\n", 3),
    _py("PY04-neg-module", "PY04",
        "pass\n"),
    _py("PY04-neg-real-body", "PY04",
        "def go(x):\n"
        "    return x\n"),
    # PY05 - missing main
    _py("PY05-pos-no-functions", "PY05",
        "x = 1\n"
        "print(x)\n", None),
    _py("PY05-pos-only-helpers", "PY05",
        "def helper():\n"
        "    return 1\n"
        "helper()\n", None),
    _py("PY05-neg-has-main", "PY05",
        "def main():\n"
        "    return 1\n"
        "main()\n"),
    _py("PY05-neg-conventional", "PY05",
        "def main():\n"
        "    helper()\n"
        "def helper():\n"
        "    return 1\n"
        "main()\n"),
    # PY06 - missing top-level call to main
    _py("PY06-pos-never-called", "PY06",
        "def main():\n"
        "    return 1\n", None),
    _py("PY06-pos-only-inner-call", "PY06",
        "def main():\n"
        "    x = 1\n"
        "def game():\n"
        "    main()\n", None),
    _py("PY06-neg-called", "PY06",
        "def main():\n"
        "    return 1\n"
        "main()\n"),
    _py("PY06-neg-called-in-guard", "PY06",
        "def main():\n"
        "    return 1\n"
        "if __name__ == '__main__':\n"
        "    main()\n"),
    # PY07 - main not first
    _py("PY07-pos-helper-first", "PY07",
        "def helper():\n"
        "    return 1\n"
        "def main():\n"
        "    helper()\n"
        "main()\n", None),
    _py("PY07-pos-two-before", "PY07",
        "def setup():\n"
        "    return 1\n"
        "def roll():\n"
        "    return 2\n"
        "def main():\n"
        "    setup()\n"
        "main()\n", None),
    _py("PY07-neg-main-first", "PY07",
        "def main():\n"
        "    helper()\n"
        "def helper():\n"
        "    return 1\n"
        "main()\n"),
    _py("PY07-neg-no-main", "PY07",
        "def helper():\n"
        "    return 1\n"
        "helper()\n"),
    # PY08 - main has arguments
    _py("PY08-pos-one-arg", "PY08",
        "def main(argv):\n"
        "    return argv\n"
        "main()\n", None),
    _py("PY08-pos-two-args", "PY08",
        "def main(a, b):\n"
        "    return a + b\n"
        "main()\n", None),
    _py("PY08-neg-no-args", "PY08",
        "def main():\n"
        "    return 1\n"
        "main()\n"),
    _py("PY08-neg-helper-args", "PY08",
        "def main():\n"
        "    helper(1)\n"
        "def helper(x):\n"
        "    return x\n"
        "main()\n"),
    # PY09 - no other function besides main
    _py("PY09-pos-only-main", "PY09",
        "def main():\n"
        "    return 1\n"
        "main()\n", None),
    _py("PY09-pos-main-twice", "PY09",
        "def main():\n"
        "    return 1\n"
        "def main():\n"
        "    return 2\n"
        "main()\n", None),
    _py("PY09-neg-has-helper", "PY09",
        "def main():\n"
        "    helper()\n"
        "def helper():\n"
        "    return 1\n"
        "main()\n"),
    _py("PY09-neg-no-functions", "PY09",
        "x = 1\n"),
    # PY10 - nested function declaration
    _py("PY10-pos-inner", "PY10",
        "def outer():\n"
        "    def inner():\n"
        "        return 1\n"
        "    return inner\n", 2),
    _py("PY10-pos-two-inner", "PY10",
        "def outer():\n"
        "    def first():\n"
        "        return 1\n"
        "    def second():\n"
        "        return 2\n"
        "    return first\n", 2, 4),
    _py("PY10-neg-top-level", "PY10",
        "def main():\n"
        "    helper()\n"
        "def helper():\n"
        "    return 1\n"
        "main()\n"),
    _py("PY10-neg-method-in-class", "PY10",
        "class Game:\n"
        "    def play(self):\n"
        "        return 1\n"),
    # PY11 - nested return
    _py("PY11-pos-in-loop", "PY11",
        "def find(xs, v):\n"
        "    i = 0\n"
        "    for x in xs:\n"
        "        if x == v:\n"
        "            return i\n"
        "        i += 1\n", 5),
    _py("PY11-pos-both-branches", "PY11",
        "def sign(x):\n"
        "    if x:\n"
        "        return 1\n"
        "    else:\n"
        "        return 2\n", 3, 5),
    _py("PY11-neg-trailing", "PY11",
        "def double(x):\n"
        "    y = x * 2\n"
        "    return y\n"),
    _py("PY11-neg-two-direct", "PY11",
        "def weird(x):\n"
        "    return 1\n"
        "    return 2\n"),
    # PY12 - multiple returns
    _py("PY12-pos-two-direct", "PY12",
        "def weird(x):\n"
        "    return 1\n"
        "    return 2\n", 1),
    _py("PY12-pos-branchy", "PY12",
        "def sign(x):\n"
        "    if x > 0:\n"
        "        return 1\n"
        "    return -1\n", 1),
    _py("PY12-neg-single", "PY12",
        "def double(x):\n"
        "    return x * 2\n"),
    _py("PY12-neg-one-each", "PY12",
        "def a(x):\n"
        "    return x\n"
        "def b(x):\n"
        "    return x\n"),
    # PY13 - co-recursive call to main
    _py("PY13-pos-game-calls-main", "PY13",
        "def game():\n"
        "    main()\n", 2),
    _py("PY13-pos-two-callers", "PY13",
        "def game():\n"
        "    main()\n"
        "def replay():\n"
        "    main()\n", 2, 4),
    _py("PY13-neg-main-recurses", "PY13",
        "def main():\n"
        "    main()\n"),
    _py("PY13-neg-top-level-call", "PY13",
        "def main():\n"
        "    return 1\n"
        "main()\n"),
    # PY14 - recursive call
    _py("PY14-pos-main", "PY14",
        "def main():\n"
        "    main()\n", 2),
    _py("PY14-pos-factorial", "PY14",
        "def fact(n):\n"
        "    if n:\n"
        "        return fact(n - 1)\n"
        "    return 1\n", 3),
    _py("PY14-neg-calls-other", "PY14",
        "def game():\n"
        "    play()\n"
        "def play():\n"
        "    return 1\n"),
    _py("PY14-neg-call-outside", "PY14",
        "def game():\n"
        "    return 1\n"
        "game()\n"),
    # PY15 - quit/exit calls
    _py("PY15-pos-exit", "PY15",
        "def bail():\n"
        "    exit()\n", 2),
    _py("PY15-pos-quit-and-exit", "PY15",
        "quit()\n"
        "def bail():\n"
        "    exit()\n", 1, 3),
    _py("PY15-neg-clean", "PY15",
        "def main():\n"
        "    return 1\n"
        "main()\n"),
    _py("PY15-neg-attribute-call", "PY15",
        "import sys\n"
        "def bail():\n"
        "    sys.exit()\n"),
    # PY16 - magic numbers
    _py("PY16-pos-seven", "PY16",
        "def lucky(x):\n"
        "    return x * 7\n", 2),
    _py("PY16-pos-two-lines", "PY16",
        "def area(r):\n"
        "    pi = 3.14159\n"
        "    return pi * r * 100\n", 2, 3),
    _py("PY16-neg-allowed-set", "PY16",
        "def step(x):\n"
        "    x += 1\n"
        "    x -= -1\n"
        "    return x * 2 + 0\n"),
    _py("PY16-neg-module-constant", "PY16",
        "SIDES = 6\n"
        "def roll():\n"
        "    return SIDES\n"),
]

JAVA_FIXTURES = [
    # JV01 - attribute visibility
    _jv("JV01-pos-public", "JV01",
        "class Car {\n"
        "    public int fuel;\n"
        "}\n", 2),
    _jv("JV01-pos-default-and-protected", "JV01",
        "class Car {\n"
        "    int count;\n"
        "    protected int _speed;\n"
        "}\n", 2, 3),
    _jv("JV01-neg-private", "JV01",
        "class Car {\n"
        "    private int _fuel;\n"
        "}\n"),
    _jv("JV01-neg-public-static-final", "JV01",
        "class Car {\n"
        "    public static final int MAX_FUEL = 60;\n"
        "}\n"),
    # JV02 - underscore prefix
    _jv("JV02-pos-plain", "JV02",
        "class Car {\n"
        "    private int fuel;\n"
        "}\n", 2),
    _jv("JV02-pos-two-declarators", "JV02",
        "class Car {\n"
        "    private int a, b;\n"
        "}\n", 2, 2),
    _jv("JV02-neg-underscored", "JV02",
        "class Car {\n"
        "    private int _fuel;\n"
        "}\n"),
    _jv("JV02-neg-constant", "JV02",
        "class Car {\n"
        "    private static final int MAX = 2;\n"
        "}\n"),
    # JV03 - constants in all-caps
    _jv("JV03-pos-camel", "JV03",
        "class Car {\n"
        "    private static final int maxSize = 2;\n"
        "}\n", 2),
    _jv("JV03-pos-mixed", "JV03",
        "class Units {\n"
        "    public static final double Cm_Per_Inch = 2.54;\n"
        "}\n", 2),
    _jv("JV03-neg-all-caps", "JV03",
        "class Units {\n"
        "    public static final double CM_PER_INCH = 2.54;\n"
        "}\n"),
    _jv("JV03-neg-not-constant", "JV03",
        "class Car {\n"
        "    private int fuel;\n"
        "}\n"),
    # JV04 - one attribute per line
    _jv("JV04-pos-pair", "JV04",
        "class Car {\n"
        "    private int _a, _b;\n"
        "}\n", 2),
    _jv("JV04-pos-triple", "JV04",
        "class Car {\n"
        "    private int _a, _b, _c;\n"
        "}\n", 2),
    _jv("JV04-neg-single", "JV04",
        "class Car {\n"
        "    private int _fuel;\n"
        "}\n"),
    _jv("JV04-neg-separate-rows", "JV04",
        "class Car {\n"
        "    private int _a;\n"
        "    private int _b;\n"
        "}\n"),
    # JV05 - initializer blocks
    _jv("JV05-pos-instance", "JV05",
        "class Car {\n"
        "    private int _fuel;\n"
        "    {\n"
        "        _fuel = 0;\n"
        "    }\n"
        "}\n", 3),
    _jv("JV05-pos-static", "JV05",
        "class Car {\n"
        "    static {\n"
        "        setup();\n"
        "    }\n"
        "}\n", 2),
    _jv("JV05-neg-constructor", "JV05",
        "class Car {\n"
        "    private int _fuel;\n"
        "    Car() {\n"
        "        _fuel = 0;\n"
        "    }\n"
        "}\n"),
    _jv("JV05-neg-plain", "JV05",
        "class Car {\n"
        "    private int _fuel;\n"
        "}\n"),
    # JV06 - magic numbers
    _jv("JV06-pos-volume", "JV06",
        "class Balloon {\n"
        "    private double _radius;\n"
        "    double volume() {\n"
        "        return _radius * 4.0 / 3.0 * 3.14159;\n"
        "    }\n"
        "}\n", 4, 4, 4),
    _jv("JV06-pos-two-lines", "JV06",
        "class Car {\n"
        "    void drive(int miles) {\n"
        "        int rate = 55;\n"
        "        report(miles / 12);\n"
        "    }\n"
        "}\n", 3, 4),
    _jv("JV06-neg-allowed", "JV06",
        "class Car {\n"
        "    void tick(int i) {\n"
        "        i = i + 1;\n"
        "        i = i * 2 - 0;\n"
        "    }\n"
        "}\n"),
    _jv("JV06-neg-final-exempt", "JV06",
        "class Balloon {\n"
        "    private static final double PI = 3.14159;\n"
        "    double area() {\n"
        "        final double factor = 4.0;\n"
        "        return factor;\n"
        "    }\n"
        "}\n"),
    # JV07 - multiple returns
    _jv("JV07-pos-two-direct", "JV07",
        "class Car {\n"
        "    int speed(int x) {\n"
        "        return x;\n"
        "        return x + x;\n"
        "    }\n"
        "}\n", 2),
    _jv("JV07-pos-branchy", "JV07",
        "class Car {\n"
        "    int sign(int x) {\n"
        "        if (x > 0) {\n"
        "            return 1;\n"
        "        }\n"
        "        return -1;\n"
        "    }\n"
        "}\n", 2),
    _jv("JV07-neg-single", "JV07",
        "class Car {\n"
        "    int speed(int x) {\n"
        "        return x * 2;\n"
        "    }\n"
        "}\n"),
    _jv("JV07-neg-one-each", "JV07",
        "class Car {\n"
        "    int a(int x) {\n"
        "        return x;\n"
        "    }\n"
        "    int b(int x) {\n"
        "        return x;\n"
        "    }\n"
        "}\n"),
    # JV08 - break statements
    _jv("JV08-pos-while", "JV08",
        "class Car {\n"
        "    void wait(int n) {\n"
        "        while (n > 0) {\n"
        "            break;\n"
        "        }\n"
        "    }\n"
        "}\n", 4),
    _jv("JV08-pos-two-loops", "JV08",
        "class Car {\n"
        "    void scan(int n) {\n"
        "        while (n > 0) {\n"
        "            break;\n"
        "        }\n"
        "        for (int i = 0; i < n; i++) {\n"
        "            break;\n"
        "        }\n"
        "    }\n"
        "}\n", 4, 7),
    _jv("JV08-neg-clean-loop", "JV08",
        "class Car {\n"
        "    void wait(int n) {\n"
        "        while (n > 0) {\n"
        "            n--;\n"
        "        }\n"
        "    }\n"
        "}\n"),
    _jv("JV08-neg-initializer-block", "JV08",
        "class Car {\n"
        "    {\n"
        "        while (true) {\n"
        "            break;\n"
        "        }\n"
        "    }\n"
        "}\n"),
    # JV09 - continue statements
    _jv("JV09-pos-while", "JV09",
        "class Car {\n"
        "    void skip(int n) {\n"
        "        while (n > 0) {\n"
        "            continue;\n"
        "        }\n"
        "    }\n"
        "}\n", 4),
    _jv("JV09-pos-nested-if", "JV09",
        "class Car {\n"
        "    void skip(int n) {\n"
        "        for (int i = 0; i < n; i++) {\n"
        "            if (i == 2) {\n"
        "                continue;\n"
        "            }\n"
        "        }\n"
        "    }\n"
        "}\n", 5),
    _jv("JV09-neg-clean", "JV09",
        "class Car {\n"
        "    void count(int n) {\n"
        "        while (n > 0) {\n"
        "            n--;\n"
        "        }\n"
        "    }\n"
        "}\n"),
    _jv("JV09-neg-initializer-block", "JV09",
        "class Car {\n"
        "    {\n"
        "        while (true) {\n"
        "            continue;\n"
        "        }\n"
        "    }\n"
        "}\n"),
    # JV10 - 30-statement budget (sources built below)
    # JV11 - instanceof
    _jv("JV11-pos-condition", "JV11",
        "class Garage {\n"
        "    void check(Object o) {\n"
        "        if (o instanceof Car) {\n"
        "            count++;\n"
        "        }\n"
        "    }\n"
        "}\n", 3),
    _jv("JV11-pos-assignment", "JV11",
        "class Garage {\n"
        "    void check(Object o) {\n"
        "        boolean b = (o instanceof Car);\n"
        "    }\n"
        "}\n", 3),
    _jv("JV11-neg-none", "JV11",
        "class Garage {\n"
        "    void check(int o) {\n"
        "        if (o > 0) {\n"
        "            count++;\n"
        "        }\n"
        "    }\n"
        "}\n"),
    _jv("JV11-neg-initializer-block", "JV11",
        "class Garage {\n"
        "    {\n"
        "        flag = (probe instanceof Car);\n"
        "    }\n"
        "}\n"),
    # JV12 - ternary
    _jv("JV12-pos-return", "JV12",
        "class MathUtil {\n"
        "    int max(int a, int b) {\n"
        "        return (a > b) ? a : b;\n"
        "    }\n"
        "}\n", 3),
    _jv("JV12-pos-assign", "JV12",
        "class MathUtil {\n"
        "    void pick(int a) {\n"
        "        int r = a > 0 ? a : 0;\n"
        "    }\n"
        "}\n", 3),
    _jv("JV12-neg-if-else", "JV12",
        "class MathUtil {\n"
        "    int max(int a, int b) {\n"
        "        if (a > b) {\n"
        "            return a;\n"
        "        }\n"
        "        return b;\n"
        "    }\n"
        "}\n"),
    _jv("JV12-neg-field-initializer", "JV12",
        "class MathUtil {\n"
        "    private int _basis = 1 > 0 ? 1 : 0;\n"
        "}\n"),
    # JV13 - labeled statements
    _jv("JV13-pos-while", "JV13",
        "class Maze {\n"
        "    void walk(int n) {\n"
        "        search:\n"
        "        while (n > 0) {\n"
        "            n--;\n"
        "        }\n"
        "    }\n"
        "}\n", 3),
    _jv("JV13-pos-for", "JV13",
        "class Maze {\n"
        "    void walk(int n) {\n"
        "        rows:\n"
        "        for (int i = 0; i < n; i++) {\n"
        "            probe(i);\n"
        "        }\n"
        "    }\n"
        "}\n", 3),
    _jv("JV13-neg-plain-loops", "JV13",
        "class Maze {\n"
        "    void walk(int n) {\n"
        "        while (n > 0) {\n"
        "            n--;\n"
        "        }\n"
        "    }\n"
        "}\n"),
    _jv("JV13-neg-initializer-block", "JV13",
        "class Maze {\n"
        "    {\n"
        "        spin:\n"
        "        while (true) {\n"
        "            probe();\n"
        "        }\n"
        "    }\n"
        "}\n"),
    # JV14 - lambdas
    _jv("JV14-pos-statement", "JV14",
        "class Engine {\n"
        "    void start() {\n"
        "        Runnable r = () -> ignite();\n"
        "    }\n"
        "}\n", 3),
    _jv("JV14-pos-two", "JV14",
        "class Engine {\n"
        "    void start() {\n"
        "        Runnable a = () -> ignite();\n"
        "        Worker b = (x) -> x + 1;\n"
        "    }\n"
        "}\n", 3, 4),
    _jv("JV14-neg-none", "JV14",
        "class Engine {\n"
        "    void start() {\n"
        "        ignite();\n"
        "    }\n"
        "}\n"),
    _jv("JV14-neg-field-initializer", "JV14",
        "class Engine {\n"
        "    private Worker _w = (x) -> x + 1;\n"
        "}\n"),
    # JV15 - on-the-fly declarations
    _jv("JV15-pos-after-assign", "JV15",
        "class Car {\n"
        "    void drive() {\n"
        "        int a;\n"
        "        a = 1;\n"
        "        int b;\n"
        "    }\n"
        "}\n", 5),
    _jv("JV15-pos-two-late", "JV15",
        "class Car {\n"
        "    void drive() {\n"
        "        report();\n"
        "        int a;\n"
        "        int b;\n"
        "    }\n"
        "}\n", 4, 5),
    _jv("JV15-neg-decls-first", "JV15",
        "class Car {\n"
        "    void drive() {\n"
        "        int a;\n"
        "        int b;\n"
        "        a = b;\n"
        "    }\n"
        "}\n"),
    _jv("JV15-neg-loop-scoped", "JV15",
        "class Car {\n"
        "    void drive(int n) {\n"
        "        int total;\n"
        "        total = 0;\n"
        "        for (int i = 0; i < n; i++) {\n"
        "            int step = i;\n"
        "            total += step;\n"
        "        }\n"
        "    }\n"
        "}\n"),
    # JV16 - if needs a block
    _jv("JV16-pos-then", "JV16",
        "class Car {\n"
        "    void check(int x) {\n"
        "        if (x > 0)\n"
        "            x--;\n"
        "    }\n"
        "}\n", 3),
    _jv("JV16-pos-else", "JV16",
        "class Car {\n"
        "    void check(int x) {\n"
        "        if (x > 0) {\n"
        "            x--;\n"
        "        } else\n"
        "            x++;\n"
        "    }\n"
        "}\n", 3),
    _jv("JV16-neg-braced", "JV16",
        "class Car {\n"
        "    void check(int x) {\n"
        "        if (x > 0) {\n"
        "            x--;\n"
        "        }\n"
        "    }\n"
        "}\n"),
    _jv("JV16-neg-else-if-chain", "JV16",
        "class Car {\n"
        "    void check(int x) {\n"
        "        if (x > 0) {\n"
        "            x--;\n"
        "        } else if (x < 0) {\n"
        "            x++;\n"
        "        } else {\n"
        "            report();\n"
        "        }\n"
        "    }\n"
        "}\n"),
    # JV17 - while needs a block
    _jv("JV17-pos-bare", "JV17",
        "class Car {\n"
        "    void spin(int x) {\n"
        "        while (x > 0)\n"
        "            x--;\n"
        "    }\n"
        "}\n", 3),
    _jv("JV17-pos-bare-call", "JV17",
        "class Car {\n"
        "    void poll(int x) {\n"
        "        while (x > 0)\n"
        "            probe();\n"
        "    }\n"
        "}\n", 3),
    _jv("JV17-neg-braced", "JV17",
        "class Car {\n"
        "    void spin(int x) {\n"
        "        while (x > 0) {\n"
        "            x--;\n"
        "        }\n"
        "    }\n"
        "}\n"),
    _jv("JV17-neg-initializer-block", "JV17",
        "class Car {\n"
        "    {\n"
        "        while (true)\n"
        "            probe();\n"
        "    }\n"
        "}\n"),
    # JV18 - for needs a block
    _jv("JV18-pos-c-style", "JV18",
        "class Car {\n"
        "    void roll(int n) {\n"
        "        for (int i = 0; i < n; i++)\n"
        "            probe(i);\n"
        "    }\n"
        "}\n", 3),
    _jv("JV18-pos-foreach", "JV18",
        "class Car {\n"
        "    void roll(int[] xs) {\n"
        "        for (int x : xs)\n"
        "            probe(x);\n"
        "    }\n"
        "}\n", 3),
    _jv("JV18-neg-braced-c-style", "JV18",
        "class Car {\n"
        "    void roll(int n) {\n"
        "        for (int i = 0; i < n; i++) {\n"
        "            probe(i);\n"
        "        }\n"
        "    }\n"
        "}\n"),
    _jv("JV18-neg-braced-foreach", "JV18",
        "class Car {\n"
        "    void roll(int[] xs) {\n"
        "        for (int x : xs) {\n"
        "            probe(x);\n"
        "        }\n"
        "    }\n"
        "}\n"),
    # JV19 - conventional C-style for
    _jv("JV19-pos-assign-init", "JV19",
        "class Car {\n"
        "    void roll(int n) {\n"
        "        for (i = 0; i < n; i += 2) {\n"
        "            probe(i);\n"
        "        }\n"
        "    }\n"
        "}\n", 3),
    _jv("JV19-pos-empty-cond", "JV19",
        "class Car {\n"
        "    void roll(int n) {\n"
        "        for (int i = 0; ; i++) {\n"
        "            probe(i);\n"
        "        }\n"
        "    }\n"
        "}\n", 3),
    _jv("JV19-neg-conventional", "JV19",
        "class Car {\n"
        "    void roll(int n) {\n"
        "        for (int i = 0; i < n; i++) {\n"
        "            probe(i);\n"
        "        }\n"
        "    }\n"
        "}\n"),
    _jv("JV19-neg-countdown", "JV19",
        "class Car {\n"
        "    void roll(int n) {\n"
        "        for (int i = n; i > 0; i--) {\n"
        "            probe(i);\n"
        "        }\n"
        "    }\n"
        "}\n"),
    # JV20 - one local per line
    _jv("JV20-pos-pair", "JV20",
        "class Car {\n"
        "    void drive() {\n"
        "        int a, b;\n"
        "    }\n"
        "}\n", 3),
    _jv("JV20-pos-triple-with-init", "JV20",
        "class Car {\n"
        "    void drive() {\n"
        "        int a = 0, b = 1, c = 2;\n"
        "    }\n"
        "}\n", 3),
    _jv("JV20-neg-separate", "JV20",
        "class Car {\n"
        "    void drive() {\n"
        "        int a;\n"
        "        int b;\n"
        "    }\n"
        "}\n"),
    _jv("JV20-neg-field-row", "JV20",
        "class Car {\n"
        "    private int _a, _b;\n"
        "}\n"),
]


def _long_method(n_statements: int) -> str:
    body = "".join(f"        count = count + {i};\n" for i in range(n_statements))
    return "class Big {\n    void churn() {\n" + body + "    }\n}\n"


JAVA_FIXTURES += [
    _jv("JV10-pos-31", "JV10", _long_method(31), 2),
    _jv("JV10-pos-40", "JV10", _long_method(40), 2),
    _jv("JV10-neg-30", "JV10", _long_method(30)),
    _jv("JV10-neg-blocks-do-not-count", "JV10",
        "class Big {\n"
        "    void churn() {\n"
        + "".join(
            "        {\n            count = count + 1;\n        }\n" for _ in range(15)
        )
        + "    }\n}\n"),
]

ALL_FIXTURES = PYTHON_FIXTURES + JAVA_FIXTURES
