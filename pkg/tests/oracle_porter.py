"""Second, independently structured Porter stemmer used only as a test oracle.

Table-driven over a consonant/vowel shape string, unlike the package
implementation which works positionally on the word. Frozen reference
vectors in test_porter.py anchor both against the published rule set.
"""


def shape(word):
    """Map to 'c'/'v' per letter; y is a vowel iff preceded by a consonant."""
    out = []
    for i, ch in enumerate(word):
        if ch in "aeiou":
            out.append("v")
        elif ch == "y":
            out.append("v" if (i > 0 and out[i - 1] == "c") else "c")
        else:
            out.append("c")
    return "".join(out)


def measure(stem):
    s = shape(stem)
    # collapse runs, then count vc transitions
    collapsed = "".join(ch for i, ch in enumerate(s) if i == 0 or s[i - 1] != ch)
    return collapsed.count("vc")


def has_vowel(stem):
    return "v" in shape(stem)


def double_cons(stem):
    return len(stem) >= 2 and stem[-1] == stem[-2] and shape(stem)[-1] == "c"


def cvc(stem):
    return len(stem) >= 3 and shape(stem)[-3:] == "cvc" and stem[-1] not in "wxy"


def rule_table(word, table):
    matches = [(suf, rep, cond) for suf, rep, cond in table if word.endswith(suf)]
    if not matches:
        return word
    suf, rep, cond = max(matches, key=lambda m: len(m[0]))
    stem = word[: len(word) - len(suf)]
    return stem + rep if cond(stem) else word


def porter_oracle(word):
    if len(word) <= 2:
        return word

    # step 1a
    for suf, rep in (("sses", "ss"), ("ies", "i"), ("ss", "ss"), ("s", "")):
        if word.endswith(suf):
            word = word[: len(word) - len(suf)] + rep
            break

    # step 1b
    if word.endswith("eed"):
        if measure(word[:-3]) > 0:
            word = word[:-1]
    else:
        hit = None
        if word.endswith("ed") and has_vowel(word[:-2]):
            hit = word[:-2]
        elif word.endswith("ing") and has_vowel(word[:-3]):
            hit = word[:-3]
        if hit is not None:
            if hit.endswith(("at", "bl", "iz")):
                word = hit + "e"
            elif double_cons(hit) and hit[-1] not in "lsz":
                word = hit[:-1]
            elif measure(hit) == 1 and cvc(hit):
                word = hit + "e"
            else:
                word = hit

    # step 1c
    if word.endswith("y") and has_vowel(word[:-1]):
        word = word[:-1] + "i"

    gt0 = lambda stem: measure(stem) > 0
    gt1 = lambda stem: measure(stem) > 1

    word = rule_table(word, [
        ("ational", "ate", gt0), ("tional", "tion", gt0), ("enci", "ence", gt0),
        ("anci", "ance", gt0), ("izer", "ize", gt0), ("abli", "able", gt0),
        ("alli", "al", gt0), ("entli", "ent", gt0), ("eli", "e", gt0),
        ("ousli", "ous", gt0), ("ization", "ize", gt0), ("ation", "ate", gt0),
        ("ator", "ate", gt0), ("alism", "al", gt0), ("iveness", "ive", gt0),
        ("fulness", "ful", gt0), ("ousness", "ous", gt0), ("aliti", "al", gt0),
        ("iviti", "ive", gt0), ("biliti", "ble", gt0),
    ])
    word = rule_table(word, [
        ("icate", "ic", gt0), ("ative", "", gt0), ("alize", "al", gt0),
        ("iciti", "ic", gt0), ("ical", "ic", gt0), ("ful", "", gt0),
        ("ness", "", gt0),
    ])
    word = rule_table(word, [
        ("al", "", gt1), ("ance", "", gt1), ("ence", "", gt1), ("er", "", gt1),
        ("ic", "", gt1), ("able", "", gt1), ("ible", "", gt1), ("ant", "", gt1),
        ("ement", "", gt1), ("ment", "", gt1), ("ent", "", gt1),
        ("ion", "", lambda stem: bool(stem) and stem[-1] in "st" and measure(stem) > 1),
        ("ou", "", gt1), ("ism", "", gt1), ("ate", "", gt1), ("iti", "", gt1),
        ("ous", "", gt1), ("ive", "", gt1), ("ize", "", gt1),
    ])

    # step 5a
    if word.endswith("e"):
        stem = word[:-1]
        m = measure(stem)
        if m > 1 or (m == 1 and not cvc(stem)):
            word = stem

    # step 5b
    if measure(word) > 1 and double_cons(word) and word.endswith("l"):
        word = word[:-1]

    return word
