"""Tableaux transcribed from the worked figures, shared by the tests."""

from ewtableaux.core import Family, Tableau

T = Tableau.from_rows

# EW tableau read as 15873426, its Le image and the NEW one read as 84536127
EW_15873426 = T(Family.EW, ["11111", "0100", "0101", "0"])
LE_51473268 = T(Family.LE, ["0101", "001", "111", ""])
NEW_84536127 = T(Family.NEW, ["1001", "110", "111", ""])

# Le tableau with permutation 51842736 and its EW partner (14367582)
LE_51842736 = T(Family.LE, ["0111", "111", "000", "01"])
EW_14367582 = T(Family.EW, ["11111", "0000", "1110", "100"])
# NEW tableau (35478612) with the same Le partner
NEW_35478612 = T(Family.NEW, ["0001", "111", "110", "00"])

# tree-like tableau walked to 31254, and its EW partner
TREE_31254 = T(Family.TREE, ["**.", ".**", "*"])
EW_31254 = T(Family.EW, ["111", "101", "0"])

# tree-like tableau on which the two tree -> EW maps disagree
TREE_DIFF = T(Family.TREE, ["*.", "*.", "**"])

# size-9 tree-like tableau and its Le image
TREE_9 = T(Family.TREE, ["*..**", "***..", "...*", ".*", "*."])
LE_OF_TREE_9 = T(Family.LE, ["0011", "1111", "000", "0", "1"])
