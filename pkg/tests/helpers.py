# tests/helpers.py
"""测试共用的场景文本。"""

TWO_LEVEL_SCENARIO = """\
# 两能级模型，γ/Δ = {gamma}
[model two_level]
delta = 1
gamma = {gamma}
p = {p}
k = {k}

[run]
t_max = {t_max}
samples = {samples}
integrator = {integrator}
{extra}
[output]
csv = {csv}
"""


def two_level_text(
    gamma: float = 2.0,
    p: float = 0.25,
    k: float = 0.0,
    t_max: float = 4.0,
    samples: int = 41,
    integrator: str = "exact",
    csv: str = "run.csv",
    extra: str = "",
) -> str:
    return TWO_LEVEL_SCENARIO.format(
        gamma=gamma, p=p, k=k, t_max=t_max, samples=samples, integrator=integrator, csv=csv, extra=extra
    )
