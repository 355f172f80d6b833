import dataclasses
import fractions
import random
import typing

from . import atlas
from . import families
from . import graphs
from . import logger
from . import reduction
from .moves import VertexType
from .moves import barred_surgery
from .moves import census_counts
from .moves import find_simplification
from .moves import intertwined_pairs
from .moves import one_simple_count
from .moves import simplification_gain
from .moves import simplify_cascade
from .moves import sum_with_torus
from .moves import surgery
from .moves import surgery_images
from .moves import vertex_census
from .pattern import CanonicalClass
from .pattern import GluingPattern
from .pattern import canonical_word

KNOWN_ROOTED_COUNTS = {1: 1, 2: 45, 3: 9450}  # The closed formula gives 18900 at genus 3
KNOWN_CLASS_COUNTS = {1: 1, 2: 6, 3: 510}
KNOWN_DIAMETERS = {1: 0, 2: 3, 3: 6}
G2_ORBIT_SIZES = {3, 6, 12}
RANDOM_ROOTS = 5
SURGERY_SAMPLE = 40  # Classes checked exhaustively for surgery laws above genus 2


@dataclasses.dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ''


def diameter_bound(genus: int) -> int:
    return 3 * genus ** 2 + 9 * genus - 12


# Counting and structure

def expected_rooted_count(genus: int) -> int:
    """Verified rooted count where one is known, the closed formula otherwise."""
    if genus in KNOWN_ROOTED_COUNTS:
        return KNOWN_ROOTED_COUNTS[genus]
    return atlas.rooted_count_formula(genus)


def check_counts(genus: int, workers: int = 1) -> CheckResult:
    count = sum(1 for _ in atlas.enumerate_rooted(genus, workers))
    expected = expected_rooted_count(genus)
    formula = atlas.rooted_count_formula(genus)
    detail = f"{count} rooted pattern(s), expected {expected}"
    if formula != expected:
        detail += f", closed formula {formula} is off by a factor {fractions.Fraction(formula, expected)}"
    return CheckResult('counts', count == expected, detail)


def check_classes(genus: int, classes: typing.Sequence[CanonicalClass]) -> CheckResult:
    orbit_total = sum(canonical_class.orbit_size for canonical_class in classes)
    passed = orbit_total == expected_rooted_count(genus)
    if genus in KNOWN_CLASS_COUNTS:
        passed = passed and len(classes) == KNOWN_CLASS_COUNTS[genus]
    if genus == 2:
        passed = passed and {canonical_class.orbit_size for canonical_class in classes} <= G2_ORBIT_SIZES
    return CheckResult('classes', passed, f"{len(classes)} class(es), orbit sizes summing to {orbit_total}")


def check_structure(genus: int, classes: typing.Sequence[CanonicalClass], seed: int = 0) -> CheckResult:
    generator = random.Random(seed)
    for canonical_class in classes:
        pattern = canonical_class.pattern()
        if pattern.vertex_count != 2 * genus - 1 or pattern.edge_count != 4 * genus - 2:
            return CheckResult('structure', False, f"bad Euler counts on {canonical_class.canonical_word}")
        for root in generator.sample(range(pattern.size), min(RANDOM_ROOTS, pattern.size)):
            if sum(info.trisections for info in vertex_census(pattern, root)) != 2 * genus:
                return CheckResult('structure', False, f"trisections != 2g on {canonical_class.canonical_word}")
    return CheckResult('structure', True, f"{len(classes)} class(es) with V=2g-1, E=4g-2 and 2g trisections")


def check_census(genus: int, classes: typing.Sequence[CanonicalClass]) -> CheckResult:
    checked = 0
    for canonical_class in classes:
        pattern = canonical_class.pattern()
        if find_simplification(pattern) is not None:
            continue
        checked += 1
        for root in range(pattern.size):
            counts = census_counts(vertex_census(pattern, root))
            if counts[VertexType.TYPE2] != genus or counts[VertexType.TYPE1] != genus - 1:
                return CheckResult('census', False, f"census {counts} on {canonical_class.canonical_word} root {root}")
    return CheckResult('census', True, f"{checked} non-simplifiable class(es), every root")


# Moves

def _sample(classes: typing.Sequence[CanonicalClass], genus: int) -> typing.Sequence[CanonicalClass]:
    if genus <= 2 or len(classes) <= SURGERY_SAMPLE:
        return classes
    stride = len(classes) // SURGERY_SAMPLE
    return classes[::stride][:SURGERY_SAMPLE]


def check_surgery_laws(genus: int, classes: typing.Sequence[CanonicalClass]) -> CheckResult:
    checked = 0
    for canonical_class in _sample(classes, genus):
        pattern = canonical_class.pattern()
        s_value = one_simple_count(pattern)
        for i, j in intertwined_pairs(pattern):
            result, image_i, image_j = surgery_images(pattern, i, j)
            key = canonical_word(result)
            if result.genus != genus \
               or canonical_word(surgery(result, image_i, image_j)) != canonical_class.canonical_word \
               or canonical_word(barred_surgery(pattern, i, j)) != key \
               or abs(one_simple_count(result) - s_value) > 2:
                return CheckResult('surgery-laws', False, f"surgery ({i}, {j}) on {canonical_class.canonical_word}")
            checked += 1
    return CheckResult('surgery-laws', True, f"{checked} surger(y/ies)")


def check_simplification(genus: int, classes: typing.Sequence[CanonicalClass]) -> CheckResult:
    steps, double_gains = 0, 0
    for canonical_class in classes:
        _, trace = simplify_cascade(canonical_class.pattern())
        for step in trace.steps:
            gain = simplification_gain(GluingPattern(step.before), step.args[0])
            if step.s_after != step.s_before + gain:
                return CheckResult('simplification', False, f"step {step.args} on {step.before}")
            double_gains += gain == 2
        steps += len(trace)
    return CheckResult(
        'simplification', True,
        f"{steps} simplification(s), {double_gains} on two-edge curves adding two 1-simple curves, the rest one"
    )


# Reduction

def check_extraction(genus: int, classes: typing.Sequence[CanonicalClass]) -> CheckResult:
    budget = 3 * genus - 1
    worst = 0
    for canonical_class in classes:
        summand, marked, trace = reduction.extract_torus_summand(canonical_class.pattern())
        worst = max(worst, trace.surgery_count)
        split_source = trace.steps[-1].before
        if summand.genus != genus - 1 or trace.surgery_count > budget \
           or canonical_word(sum_with_torus(summand, marked)) != canonical_word(GluingPattern(split_source)):
            return CheckResult('extraction', False, f"{canonical_class.canonical_word}")
    return CheckResult('extraction', True, f"{len(classes)} class(es), at most {worst} surgeries (budget {budget})")


# Graphs

def check_connectivity(genus: int, surgery_graph: graphs.SurgeryGraph, workers: int = 1) -> CheckResult:
    hat_graph = graphs.build_hat_graph(genus, workers)
    passed = graphs.is_connected(surgery_graph, genus) and graphs.is_connected(hat_graph)
    return CheckResult('connectivity', passed, f"K_{genus} and hat K_{genus} connected" if passed else "disconnected")


def check_diameter(genus: int, surgery_graph: graphs.SurgeryGraph) -> CheckResult:
    value = graphs.diameter(surgery_graph, genus)
    bound = 0 if genus == 1 else diameter_bound(genus)
    passed = value <= bound and value == KNOWN_DIAMETERS.get(genus, value)
    return CheckResult('diameter', passed, f"diameter {value}, bound {bound}")


def check_lower_bound(genus: int, surgery_graph: graphs.SurgeryGraph) -> CheckResult:
    s_values = dict(surgery_graph.graph.nodes(data='S'))
    for source, lengths in graphs.distances(surgery_graph, genus).items():
        for target, length in lengths.items():
            if 2 * length < abs(s_values[source] - s_values[target]):
                return CheckResult('lower-bound', False, f"{source} -> {target}")
    return CheckResult('lower-bound', True, "every BFS distance >= |dS| / 2")


def check_necklace(genus: int, classes: typing.Sequence[CanonicalClass]) -> CheckResult:
    built = families.necklace(genus)
    matching = [
        canonical_class.canonical_word for canonical_class in classes if families.is_necklace(canonical_class.pattern())
    ]
    sharing = sum(1 for canonical_class in classes if families.has_necklace_signature(canonical_class.pattern()))
    passed = matching == [canonical_word(built)] and families.has_necklace_signature(built)
    return CheckResult('necklace', passed, f"{len(matching)} necklace class(es), {sharing} with its curve signature")


def verify(genus: int, workers: int = 1) -> typing.List[CheckResult]:
    """Run the acceptance checks that apply to the genus."""
    classes = atlas.enumerate_class_list(genus, workers)
    surgery_graph = graphs.build_surgery_graph(genus, workers)
    checks = [
        lambda: check_counts(genus, workers),
        lambda: check_classes(genus, classes),
        lambda: check_structure(genus, classes),
        lambda: check_census(genus, classes),
        lambda: check_surgery_laws(genus, classes),
        lambda: check_simplification(genus, classes),
        lambda: check_connectivity(genus, surgery_graph, workers),
        lambda: check_diameter(genus, surgery_graph),
        lambda: check_lower_bound(genus, surgery_graph),
    ]
    if genus >= 2:
        checks += [lambda: check_extraction(genus, classes), lambda: check_necklace(genus, classes)]
    results = []
    for check in checks:
        result = check()
        logger.info(f"Check {result.name}: {'passed' if result.passed else 'FAILED'} ({result.detail}).")
        results.append(result)
    return results
