#Exact chain-level topology functions.
#
#License: MIT

"""
Sign conventions used by the chain-level constructions.

Every sign that had to be chosen is listed here together with the check that
fixes it.  The same data is shipped as 'conventions.json' at the repository
root and printed by 'topochains conventions --json'.
"""
from typing import Any, Dict

__all__ = (
    'CONVENTIONS',
    'conventions_json'
)

CONVENTIONS: Dict[str, Dict[str, Any]] = {
    'tensor_koszul': {
        'formula': 'd(x (x) y) = dx (x) y + (-1)^|x| x (x) dy',
        'pinned_by': ['alexander_whitney_leibniz'],
        'adjusted': False,
    },
    'cobar_differential': {
        'formula': 'D[s] = -[ds] + sum_{p+q=n, p,q>=1} (-1)^p [s_front_p | s_back_q]',
        'derivation': 'D(xy) = D(x) y + (-1)^|x| x D(y), |x| the cobar degree',
        'pinned_by': ['D^2 = 0 on generators', 'psi(relation) = 0 in Z[pi_1]'],
        'degree_zero_relation': 'x_{d1} - x_{d0} - x_{d2} - x_{d2} x_{d0}',
        'adjusted': False,
    },
    'maurer_cartan': {
        'formula': 'D.tau + tau.d = mu (tau (x) tau) Delta, (p,q) component signed (-1)^p',
        'convolution_form': 'd(tau) + tau * tau = 0 with d(f) = -D.f + (-1)^|f| f.d',
        'pinned_by': ['cobar_differential'],
        'adjusted': False,
    },
    'twisted_tensor': {
        'formula': 'd_tau(s (x) m) = ds (x) m + (-1)^n d_n s (x) (g_back(s) - 1) m',
        'printed': '(-1)^(n-1)',
        'pinned_by': ['d_tau^2 = 0', 'orientation system on rp2 gives (Z/2, 0, Z)'],
        'adjusted': True,
        'note': 'the printed sign fails d_tau^2 = 0 in degree 2',
    },
    'bar_differential': {
        'formula': 'D_BA = -d1 + d2, eps_i = sum_{j<=i} (|a_j| + 1)',
        'printed': 'eps_i = |a_1| + ... + |a_i| - i + 1',
        'pinned_by': ['D_BA^2 = 0', 'D_BA rho = rho d'],
        'adjusted': True,
        'note': 'the printed eps_i equals ours plus one: it yields -D_BA, which squares '
                'to zero but makes rho an anti-chain map',
    },
    'one_sided_bar': {
        'formula': 'd({a_1|...|a_n} (x) x) = (-1)^eps_n {a_1|...|a_{n-1}} (x) a_n x',
        'pinned_by': ['D^2 = 0', '(rho (x) id) d_tau = D (rho (x) id)'],
        'adjusted': True,
        'note': 'same shift of eps as bar_differential',
    },
    'rho': {
        'formula': 'rho(s) = sum over decompositions of s into consecutive faces '
                   'x_1..x_k (dims >= 1) of {[x_1]|...|[x_k]}, rho(vertex) = 1',
        'pinned_by': ['D_BA rho = rho d'],
        'adjusted': True,
        'note': 'the one-letter term alone is not a chain map once s has a nonzero '
                'reduced coproduct',
    },
    'regular_module': {
        'formula': 'generator x acts by e_c -> e_{c x^-1} (left regular action)',
        'pinned_by': ['relators act as identity'],
        'adjusted': False,
    },
    'coset_indices': {
        'formula': '0-based, coset 0 is the subgroup coset',
        'pinned_by': [],
        'adjusted': False,
    },
}


def conventions_json() -> Dict[str, Dict[str, Any]]:
    """Return a copy of the conventions table suitable for JSON output."""
    return {name: dict(entry) for name, entry in CONVENTIONS.items()}
