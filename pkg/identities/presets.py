"""
Named identity systems
"""
from .identity_system import IdentitySystem

SIGGERS4 = IdentitySystem(
    name="siggers4",
    arity=4,
    variables=("a", "r", "e"),
    identities=((("a", "r", "e", "a"), ("r", "a", "r", "e")),),
)

# Printed form; projections onto coordinates 3 and 4 satisfy it
SIGGERS6_PAPER = IdentitySystem(
    name="siggers6-paper",
    arity=6,
    variables=("x", "y", "z"),
    identities=((("x", "y", "z", "x", "y", "z"), ("y", "x", "z", "x", "z", "y")),),
    note="satisfied by the projections onto coordinates 3 and 4; cannot force Taylor behaviour",
)

SIGGERS6_CORRECTED = IdentitySystem(
    name="siggers6-corrected",
    arity=6,
    variables=("x", "y", "z"),
    identities=((("x", "y", "x", "z", "y", "z"), ("y", "x", "z", "x", "z", "y")),),
)

MAJORITY3 = IdentitySystem(
    name="majority3",
    arity=3,
    variables=("x", "y"),
    identities=(
        (("y", "x", "x"), ("x", "x", "x")),
        (("x", "y", "x"), ("x", "x", "x")),
        (("x", "x", "y"), ("x", "x", "x")),
    ),
)

MALTSEV = IdentitySystem(
    name="maltsev",
    arity=3,
    variables=("x", "y"),
    identities=(
        (("x", "y", "y"), ("x", "x", "x")),
        (("y", "y", "x"), ("x", "x", "x")),
    ),
)

PRESETS = {
    system.name: system
    for system in (SIGGERS4, SIGGERS6_PAPER, SIGGERS6_CORRECTED, MAJORITY3, MALTSEV)
}
