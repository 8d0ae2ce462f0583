"""
Brute force references for the dynamic programs, and a seeded corpus of small random instances to compare them on.
"""

# external package imports
import random, itertools
from fractions import Fraction
import networkx as nx

# absolute module imports
from advopt.exceptions import EmptyShiftError
from advopt.utils.rationals import INFINITY, divide
from advopt.shifts import Sft
from advopt.shifts.presets import one_letter_shift
from advopt.potentials import Potential, y_weights_potential
from advopt.cycles import WeightedDigraph

CORPUS_SEED = 20240611
CORPUS_SIZE = 200

def random_sft(rng, name = "random"):
    """
    A random nonempty one-step Sft on two or three letters.
    """
    while True:
        letters = [str(i) for i in range(rng.randint(2, 3))]
        allowed = [(u, v) for u in letters for v in letters if rng.random() < 0.6]
        try:
            return Sft(letters, allowed, name)
        except EmptyShiftError:
            continue

def random_potential(rng, x_sft, y_sft):
    values = [[Fraction(rng.randint(-6, 6), rng.choice([1, 2])) for v in y_sft.get_letters()]
            for u in x_sft.get_letters()]
    return Potential(x_sft.get_alphabet(), y_sft.get_alphabet(), values, "random")

def corpus(size = CORPUS_SIZE, seed = CORPUS_SEED):
    """
    Gets a reproducible list of (x_sft, y_sft, potential) triples.
    """
    rng = random.Random(seed)
    instances = []
    for i in range(size):
        x_sft = random_sft(rng, "x{}".format(i))
        y_sft = random_sft(rng, "y{}".format(i))
        instances.append((x_sft, y_sft, random_potential(rng, x_sft, y_sft)))
    return instances

def transitive_instances(instances, both = True):
    """
    The instances whose X shift, and Y shift too if both, is certified transitive.
    """
    return [instance for instance in instances if instance[0].transitivity_constant() is not None
            and (not both or instance[1].transitivity_constant() is not None)]

def classical_corpus(size = CORPUS_SIZE, seed = CORPUS_SEED):
    """
    Gets a reproducible list of (x_sft, y_sft, potential, weights) with x_sft the one point shift and the potential
    lifted from random weights on the Y letters.
    """
    rng = random.Random(seed)
    x_sft = one_letter_shift()
    instances = []
    for i in range(size):
        y_sft = random_sft(rng, "y{}".format(i))
        weights = {letter: Fraction(rng.randint(-6, 6), rng.choice([1, 2])) for letter in y_sft.get_letters()}
        instances.append((x_sft, y_sft, y_weights_potential(x_sft.get_alphabet(), y_sft.get_alphabet(), weights),
                weights))
    return instances

def legal_words(sft, k):
    """
    Every legal word of length k, in lexicographic order, by filtering all letter sequences.
    """
    return [letters for letters in itertools.product(sft.get_letters(), repeat=k) if sft.is_legal(letters)]

def birkhoff_sum(p, x_letters, y_letters):
    return sum(p.evaluate(u, v) for u, v in zip(x_letters, y_letters))

def brute_min_cost(x_sft, p, y_letters, x_words = None):
    """
    (value, lexicographically least minimizer) over every legal X-word of the same length, or over x_words if given.
    """
    if x_words is None:
        x_words = legal_words(x_sft, len(y_letters))
    best_value, best_word = INFINITY, None
    for x_letters in x_words:
        value = birkhoff_sum(p, x_letters, y_letters)
        if value < best_value:
            best_value, best_word = value, x_letters
    return best_value, best_word

def brute_h_table(x_sft, p, y_letters):
    table = {}
    for x_letters in legal_words(x_sft, len(y_letters)):
        pair = (x_letters[0], x_letters[-1])
        value = birkhoff_sum(p, x_letters, y_letters)
        if pair not in table or value < table[pair]:
            table[pair] = value
    return table

def max_over_words(y_sft, k, inner):
    """
    (value, lexicographically least maximizer) of inner over the legal Y-words of length k.
    """
    best_value, best_word = -INFINITY, None
    for y_letters in legal_words(y_sft, k):
        value = inner(y_letters)
        if value > best_value:
            best_value, best_word = value, y_letters
    return best_value, best_word

def brute_r_k(x_sft, y_sft, p, k):
    """
    (value, lexicographically least maximizer) of max_y min_x over all legal words.
    """
    x_words = legal_words(x_sft, k)
    return max_over_words(y_sft, k, lambda y_letters: brute_min_cost(x_sft, p, y_letters, x_words)[0])

def _simple_cycle_means(g):
    for cycle in nx.simple_cycles(g.to_networkx()):
        total = sum(g.weights[(cycle[i], cycle[(i + 1) % len(cycle)])] for i in range(len(cycle)))
        yield divide(total, len(cycle))

def brute_min_mean(g):
    """
    Least cycle mean of a WeightedDigraph by listing every simple cycle, or None if there is none.
    """
    return min(_simple_cycle_means(g), default=None)

def brute_max_mean(g):
    """
    Greatest cycle mean of a WeightedDigraph by listing every simple cycle, or None if there is none.
    """
    return max(_simple_cycle_means(g), default=None)

def random_digraph(rng, name = "random"):
    """
    A random WeightedDigraph on one to six nodes with rational weights; it may have no cycle.
    """
    n = rng.randint(1, 6)
    edges = [(u, v, Fraction(rng.randint(-5, 5), rng.choice([1, 2, 3]))) for u in range(n) for v in range(n)
            if rng.random() < 0.35]
    return WeightedDigraph(range(n), edges, name)
