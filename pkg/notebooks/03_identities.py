# %% [markdown]
# # Identities, stability and separation
#
# Every check enumerates all assignments, vectorised with numpy. Products are
# checked one factor at a time, so a product is never multiplied out.

# %%
import time

from synmon import (Cong, direct_product, equational_separation, fixture, long_pair, nfb_premises,
                    opposite, parse_word, satisfies, sigma_pair, stability_check, syntactic_of_class,
                    syntactic_of_regex)
from synmon.identities import E1_BASIS

e1 = fixture("E1")
for ident in E1_BASIS:
    print(ident, "->", satisfies(e1, ident))

# %% [markdown]
# The sigma family separates the chain above E1: E1 fails every member, while
# the syntactic monoid of `[atab^2]` under beta satisfies the second and fails the first.

# %%
for n in range(3):
    print(sigma_pair(n), "->", satisfies(e1, sigma_pair(n)).status)
g2 = syntactic_of_class(Cong.BETA, parse_word("atab^2"))
print("G2:", satisfies(g2, sigma_pair(2)).status, satisfies(g2, sigma_pair(1)).status)

# %% [markdown]
# The long identities hold because both sides are beta-related.

# %%
for n in (1, 2, 3):
    print(long_pair(n), satisfies(e1, long_pair(n)).status)

# %% [markdown]
# Stability is only ever checked up to a length bound. The verdict says so.

# %%
print(stability_check(g2, Cong.BETA, parse_word("atb^2a"), 7))
print(stability_check(fixture("L21"), Cong.BETA, parse_word("a^2b^2"), 5))

# %% [markdown]
# The product below satisfies all three premises, and so does its dual once
# the premises are mirrored.

# %%
m = direct_product(syntactic_of_regex("a+ b b+ t a+"), g2)
start = time.perf_counter()
print("\n".join(nfb_premises(m, 3, 7).lines()))
print("\n".join(nfb_premises(opposite(m), 3, 7, dual=True).lines()))
print(f"{time.perf_counter() - start:.2f}s")

# %% [markdown]
# Bounded separation finds short identities that tell generators apart.

# %%
from synmon.repro import table_rows
rows = table_rows()
for a, b in [("2", "4"), ("4", "6"), ("2", "6")]:
    print(a, b, equational_separation(rows[a], rows[b], 4, 8))
