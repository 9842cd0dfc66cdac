"""Worked example paths exercised by the verification suite and the docs.

``SHOWCASE_PATH`` is a length-25 G-Motzkin path (29 steps, four of them
vertical drops) that avoids uvv but not uvu.

``BIJECTION_SAMPLE_INPUT`` is a uvv-avoiding path of length 28 and
``BIJECTION_SAMPLE_OUTPUT`` its image under sigma, a uvu-avoiding path of
the same length; together they pin down a nontrivial instance of the
bijection touching every recursion case.
"""

SHOWCASE_PATH = "huvuuudhhuvuvddhuuuhddudduuvd"

BIJECTION_SAMPLE_INPUT = "uuudvvuudvuuuuuvdvvvhuuhdvuuuvhvuvuuhudvvv"

BIJECTION_SAMPLE_OUTPUT = "uudduuvduuuuvvddhuhuvduuuvhvuuhuddvv"
