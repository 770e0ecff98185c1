"""Weight-4 words of the length-16 code: which are listed, and how they overlap."""

import json

from quatweyl import code as C


def main():
    c16 = C.c16()
    words = C.four_weight_words(c16)
    listed = set(C.PRINTED_WEIGHT4_WORDS)
    report = {
        "weights": C.weight_distribution(c16).to_json(),
        "weight4": len(words),
        "listed": len(listed),
        "listed_are_codewords": all(w in c16 for w in listed),
        "unlisted": [C.bitstring(w) for w in words if w not in listed],
        "pairwise_intersections": C.intersection_histogram(words),
        "per_word_overlaps_0_1_2_3": [list(k) + [v] for k, v in C.neighbour_profile(words).items()],
    }
    print(json.dumps(report, indent=2))


if __name__ == "__main__":
    main()
