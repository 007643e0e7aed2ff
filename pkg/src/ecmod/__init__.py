"""Solvers, classifiers and instance generators for modification problems
on edge-coloured graphs: vertex deletion, edge deletion and switching to a
fixed homomorphism target."""

from .graphs import (
    BLUE,
    RED,
    ColouredGraph,
    GraphError,
    NotTwoColoured,
    Target,
    core_targets,
    make_order1_target,
    make_order2_target,
    match_core,
)
from .twosat import (
    Assignment,
    Group,
    Literal,
    TwoCnf,
    group_del_almost_2sat,
    group_to_var_reduction,
    solve_2sat,
    var_del_almost_2sat,
)
from .homcheck import (
    Homomorphism,
    Obstruction,
    build_2sat,
    find_all_blue_odd_cycle,
    find_odd_blue_parity_cycle,
    find_rb_odd_r_path,
    find_rbr_image,
    hom_exists_2sat,
    hom_exists_bruteforce,
    is_homomorphism,
    min_switch_to_monochromatic,
    validate_obstruction,
)
from .fptsolve import (
    ProblemKind,
    Solution,
    apply_certificate,
    solve,
    solve_edel,
    solve_edel_fpt,
    solve_edel_ptime,
    solve_switch,
    solve_vdel,
    solve_xp,
)
from .dichotomy import (
    Classification,
    classify_edel,
    classify_switch,
    classify_vdel,
    compute_core,
)
from .gadgets import (
    MisInstance,
    ReducedInstance,
    VcInstance,
    gen_mis_switch,
    gen_vc_edel_h2b_rb,
    gen_vc_edel_h2rb_rb,
    gen_vc_switch_h2b_rdash,
    verify_gadget_properties,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
