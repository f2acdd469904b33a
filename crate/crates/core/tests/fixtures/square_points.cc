# vertices of the unit square, homogenized
12 4
00++
00--
0-0+
0+0-
0--0
0++0
+00+
-00-
-0+0
+0-0
--00
++00
