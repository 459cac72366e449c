"""A walk through numeration in base tau = (1 + sqrt 5) / 2."""

from betanum import (
    BetaExpansion,
    ParrySystem,
    c_beta,
    digits_value,
    drift,
    greedy_expand,
    infinite_renyi,
    preset,
    renyi_expansion,
)

tau = preset("tau")
b = tau.gen()  # the generator of Q(tau); every value below is exact
print(tau, "=", b.to_decimal(20))

# tau^2 = tau + 1 is built into the arithmetic
print("b*b =", b * b)

# greedy expansions
for x in (b + 1, b - 1, (5 + 3 * (2 * b - 1)) / 10, tau.one() / 7):
    e = greedy_expand(x)
    print(f"{x.to_decimal(8):>12}  ->  {e}")
    assert digits_value(e, tau) == x

# d_tau(1) and its infinite version d*
d = renyi_expansion(tau)
print("d(1) =", d, "  d*(1) =", infinite_renyi(d))

# admissible strings never contain 11
print(BetaExpansion.parse("0•11"), "is the string 0.11 in base tau, which equals", digits_value(BetaExpansion.parse("0•11"), tau))

# the beta-integers and the Fibonacci word that codes their gaps
system = ParrySystem.of(tau)
print(system.substitution)
print("u =", "".join(map(str, system.word().prefix(34))))
for n, value, letter in system.stream():
    if n > 8:
        break
    print(f"b_{n} = {str(value):>6} = {value.to_decimal(6):>9}   digits {str(system.digits_of(n)) or '0':>6}   gap {letter}")

# b_n grows like c n with a bounded error
c = c_beta(tau, system.expansion, system.parry_poly)
print("c_tau =", c.c_beta_exact, "=", c.decimal())
worst = max((abs(drift(system, n, c)), n) for n in range(1, 2000))
print("largest |b_n - c n| for n < 2000:", worst[0].to_decimal(8), "at n =", worst[1])
print("1/tau^3 =", (1 / b ** 3).to_decimal(8))
