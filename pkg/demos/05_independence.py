"""Squaring a per-event rate silently assumes the events are independent."""

from fractions import Fraction

from forensic_lr import naive_independence_combination, render_report

result = naive_independence_combination(Fraction(1, 8500), 2)
print(render_report(result, "text").decode())

# With a shared cause the second event is far more likely than 1 in 8,500.
# Suppose it were 1 in 100 given the first:
dependent = Fraction(1, 8500) * Fraction(1, 100)
print("under dependence:", dependent, f"(about {float(dependent / result.value):.0f}x smaller when squared)")
