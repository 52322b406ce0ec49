# gfcjac.utils package
