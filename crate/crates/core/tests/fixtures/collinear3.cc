# three collinear points
6 3
0++
0--
-0+
+0-
--0
++0
