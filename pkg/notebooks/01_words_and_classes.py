# %% [markdown]
# # Words, blocks and congruence classes
#
# A word splits at its simple letters (those occurring once) into a skeleton
# and a list of blocks. Most congruences here are read off that split.

# %%
from synmon import Cong, meet, parse_word, block_decompose, canonical, equivalent, class_dfa, compile_regex, dfa_equivalent
from synmon.congruences import enumerate_class

w = parse_word("x^2y^3xtyx^2")
d = block_decompose(w)
print("skeleton:", d.skeleton, " blocks:", [str(b) for b in d.blocks])

# %% [markdown]
# Beta compares the skeletons and, block by block, the order of first
# occurrences. So these two words are beta-related.

# %%
print(canonical(Cong.BETA, w))
print(equivalent(Cong.BETA, w, parse_word("xyty^3xy")))

# %% [markdown]
# A class is a regular language. Its automaton can be compared with a
# hand-written regex, and with brute-force enumeration.

# %%
rep = parse_word("atb^2a")
dfa = class_dfa(Cong.BETA, rep)
print(dfa.n_states, "states")
print(dfa_equivalent(dfa, compile_regex("a+ t b b+ a {a,b}* | a+ t b+ a+ b {a,b}*")))
print(sorted(str(x) for x in enumerate_class(Cong.BETA, rep, 5)))

# %%
t1g = meet(Cong.T1, Cong.GAMMA)
for r, regex in [("ab^2ta", "a+ b b+ t a+"), ("ata", "a+ t a+")]:
    print(r, dfa_equivalent(class_dfa(t1g, parse_word(r)), compile_regex(regex)))

# %% [markdown]
# Under the weaker congruence `simq` the block only has to keep its letter
# set, so one `simq` class is the union of two beta classes.

# %%
a, b = parse_word("atab^2"), parse_word("atbab^2")
q = enumerate_class(Cong.SIMQ, a, 7)
print(q == enumerate_class(Cong.BETA, a, 7) | enumerate_class(Cong.BETA, b, 7))
