# single element
2 1
+
-
