# %% [markdown]
# # Syntactic monoids and Rees quotients
#
# The syntactic monoid of a language is the transition monoid of its minimal
# complete automaton. Languages live over an unbounded alphabet, so by default
# a foreign letter is simulated and usually contributes a zero.

# %%
from synmon import (Cong, FullStar, SingleClass, fixture, m_tau, meet, morphism_search, parse_word,
                    syntactic_of_class, syntactic_of_regex, onto_synt_check)
from synmon.cli import render_table

m = syntactic_of_regex("a+ b {a,b}*")
print(m.size, "elements")
print(render_table(m))

# %% [markdown]
# With a closed alphabet the odd-length words give the group of order two.

# %%
z2 = syntactic_of_regex("({a,b}{a,b})*{a,b}", open_alphabet=False)
print(render_table(z2))

# %% [markdown]
# The Rees quotient over the alpha congruence of all words in a and b has six
# elements and maps onto the five-element monoid above.

# %%
star = m_tau(FullStar(Cong.ALPHA, ("a", "b")))
print(star.labels)
hom = morphism_search(star, m, "onto")
print(hom.describe())

# %% [markdown]
# For a single class the quotient keeps every factor class of the class.
# `a+ t a+` has ten factor classes (zero included) against seven syntactic
# classes, because the syntactic congruence also merges `a` with `a^2`.

# %%
t1g = meet(Cong.T1, Cong.GAMMA)
report = onto_synt_check(t1g, parse_word("ata"))
print(report.summary())
print(report.source.labels)
print(report.target.labels)

# %% [markdown]
# `[ab]` under t1 gives the same monoid both ways, and it is the fixture A0 with
# an identity adjoined.

# %%
from synmon.monoid import is_isomorphic
r = onto_synt_check(Cong.T1, parse_word("ab"))
print(r.summary(), is_isomorphic(r.target, fixture("A01")))

# %%
for rep, cong in [("atab^2", Cong.BETA), ("atb^2a", Cong.BETA), ("ab^2ta", Cong.BETA_DUAL)]:
    print(f"[{rep}]_{cong}:", syntactic_of_class(cong, parse_word(rep)).size)
