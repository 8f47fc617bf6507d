"""Worked example patterns used by the regression checks, as figure strings."""

FIGURES = {
    "copy_ex1_p": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-3",
    "copy_ex1_copied": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,3,4,5,-1",
    "copy_ex2_p": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,2,3,5,6,-1",
    "copy_ex2_copied": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,"
    "0,1,3,5,6,-2,0,1,3,5,6,7,-2",
    "e_op_p": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-3",
    "e_op_result": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,4,5,-2,0,1,2,5,6,-2,0,1,2,6,7,-2",
    "comp_p": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,0,1,3,5,6,-2,0,1,3,5,6,7,-2",
    "comp_result": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,"
    "0,1,2,3,5,6,-3,0,1,2,3,5,6,7,-3,0,1,3,5,7,8,-2",
    "bls_j_prime": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,0,1,2,3,5,6,-2",
    "bls_after_m": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,"
    "0,1,2,3,5,6,-3,0,1,2,3,5,6,7,-3,0,1,3,5,7,8,-2",
    "p_prime": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-3,0,1,2,5,6,-2,0,1,2,6,7,-2",
    "blp_example": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,4,5,-2",
}


def figure(name: str):
    from .pattern import named, parse_figure

    if name in FIGURES:
        return parse_figure(FIGURES[name])
    return named(name)
