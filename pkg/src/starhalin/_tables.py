"""Generated coloring tables. Do not edit by hand.

Regenerate with:  python -m starhalin.gen_tables
Entries are derived by the exact solver and re-verified in tests; when an
entry is missing, callers fall back to computing it on the fly.
"""

# level -> [[u, v, color], ...] for build_complete(level)
BASE_COMPLETE: dict = {1: [[0, 1, 1], [0, 2, 2], [0, 3, 3], [1, 2, 3], [1, 3, 4], [2, 3, 5]],
 2: [[0, 1, 1],
     [0, 2, 2],
     [0, 3, 3],
     [1, 4, 2],
     [1, 5, 4],
     [2, 6, 3],
     [2, 7, 4],
     [3, 8, 1],
     [3, 9, 4],
     [4, 5, 5],
     [4, 9, 3],
     [5, 6, 1],
     [6, 7, 5],
     [7, 8, 2],
     [8, 9, 5]],
 3: [[0, 1, 1],
     [0, 2, 2],
     [0, 3, 3],
     [1, 4, 2],
     [1, 5, 3],
     [2, 6, 3],
     [2, 7, 4],
     [3, 8, 4],
     [3, 9, 5],
     [4, 10, 3],
     [4, 11, 4],
     [5, 12, 4],
     [5, 13, 5],
     [6, 14, 1],
     [6, 15, 4],
     [7, 16, 1],
     [7, 17, 2],
     [8, 18, 1],
     [8, 19, 2],
     [9, 20, 1],
     [9, 21, 2],
     [10, 11, 5],
     [10, 21, 1],
     [11, 12, 1],
     [12, 13, 2],
     [13, 14, 3],
     [14, 15, 2],
     [15, 16, 5],
     [16, 17, 3],
     [17, 18, 5],
     [18, 19, 4],
     [19, 20, 3],
     [20, 21, 4]]}

# (h, sides) -> [[u, v, color], ...] for build_caterpillar(h, sides)
BASE_CATERPILLAR: dict = {(1, ()): [[0, 1, 1], [0, 2, 2], [0, 3, 3], [1, 2, 3], [1, 3, 4], [2, 3, 5]],
 (3, ('L',)): [[0, 1, 1],
               [0, 3, 2],
               [0, 7, 3],
               [1, 2, 2],
               [1, 4, 3],
               [2, 5, 3],
               [2, 6, 4],
               [3, 4, 4],
               [3, 7, 5],
               [4, 5, 5],
               [5, 6, 1],
               [6, 7, 2]],
 (3, ('R',)): [[0, 1, 1],
               [0, 3, 2],
               [0, 7, 3],
               [1, 2, 2],
               [1, 6, 3],
               [2, 4, 5],
               [2, 5, 3],
               [3, 4, 3],
               [3, 7, 4],
               [4, 5, 1],
               [5, 6, 4],
               [6, 7, 5]],
 (4, ('L', 'L')): [[0, 1, 1],
                   [0, 4, 2],
                   [0, 9, 3],
                   [1, 2, 2],
                   [1, 5, 4],
                   [2, 3, 3],
                   [2, 6, 5],
                   [3, 7, 4],
                   [3, 8, 1],
                   [4, 5, 3],
                   [4, 9, 5],
                   [5, 6, 1],
                   [6, 7, 3],
                   [7, 8, 2],
                   [8, 9, 4]],
 (4, ('L', 'R')): [[0, 1, 1],
                   [0, 4, 2],
                   [0, 9, 3],
                   [1, 2, 2],
                   [1, 5, 4],
                   [2, 3, 3],
                   [2, 8, 5],
                   [3, 6, 2],
                   [3, 7, 1],
                   [4, 5, 3],
                   [4, 9, 5],
                   [5, 6, 1],
                   [6, 7, 5],
                   [7, 8, 4],
                   [8, 9, 1]],
 (4, ('R', 'L')): [[0, 1, 1],
                   [0, 4, 2],
                   [0, 9, 3],
                   [1, 2, 2],
                   [1, 8, 4],
                   [2, 3, 3],
                   [2, 5, 5],
                   [3, 6, 2],
                   [3, 7, 1],
                   [4, 5, 3],
                   [4, 9, 4],
                   [5, 6, 1],
                   [6, 7, 4],
                   [7, 8, 3],
                   [8, 9, 5]],
 (4, ('R', 'R')): [[0, 1, 1],
                   [0, 4, 2],
                   [0, 9, 3],
                   [1, 2, 2],
                   [1, 8, 3],
                   [2, 3, 4],
                   [2, 7, 5],
                   [3, 5, 3],
                   [3, 6, 5],
                   [4, 5, 4],
                   [4, 9, 5],
                   [5, 6, 2],
                   [6, 7, 1],
                   [7, 8, 2],
                   [8, 9, 4]],
 (5, ('L', 'L', 'L')): [[0, 1, 1],
                        [0, 5, 2],
                        [0, 11, 3],
                        [1, 2, 2],
                        [1, 6, 3],
                        [2, 3, 4],
                        [2, 7, 3],
                        [3, 4, 2],
                        [3, 8, 3],
                        [4, 9, 3],
                        [4, 10, 1],
                        [5, 6, 4],
                        [5, 11, 5],
                        [6, 7, 5],
                        [7, 8, 1],
                        [8, 9, 5],
                        [9, 10, 4],
                        [10, 11, 2]],
 (5, ('L', 'L', 'R')): [[0, 1, 1],
                        [0, 5, 2],
                        [0, 11, 3],
                        [1, 2, 2],
                        [1, 6, 3],
                        [2, 3, 4],
                        [2, 7, 3],
                        [3, 4, 2],
                        [3, 10, 1],
                        [4, 8, 5],
                        [4, 9, 3],
                        [5, 6, 4],
                        [5, 11, 5],
                        [6, 7, 5],
                        [7, 8, 1],
                        [8, 9, 2],
                        [9, 10, 4],
                        [10, 11, 2]],
 (5, ('L', 'R', 'L')): [[0, 1, 1],
                        [0, 5, 2],
                        [0, 11, 3],
                        [1, 2, 2],
                        [1, 6, 3],
                        [2, 3, 3],
                        [2, 10, 4],
                        [3, 4, 4],
                        [3, 7, 1],
                        [4, 8, 1],
                        [4, 9, 5],
                        [5, 6, 4],
                        [5, 11, 5],
                        [6, 7, 5],
                        [7, 8, 2],
                        [8, 9, 3],
                        [9, 10, 1],
                        [10, 11, 2]],
 (5, ('L', 'R', 'R')): [[0, 1, 1],
                        [0, 5, 2],
                        [0, 11, 3],
                        [1, 2, 2],
                        [1, 6, 3],
                        [2, 3, 3],
                        [2, 10, 4],
                        [3, 4, 1],
                        [3, 9, 5],
                        [4, 7, 2],
                        [4, 8, 4],
                        [5, 6, 4],
                        [5, 11, 5],
                        [6, 7, 5],
                        [7, 8, 1],
                        [8, 9, 3],
                        [9, 10, 1],
                        [10, 11, 2]],
 (5, ('R', 'L', 'L')): [[0, 1, 1],
                        [0, 5, 2],
                        [0, 11, 3],
                        [1, 2, 2],
                        [1, 10, 3],
                        [2, 3, 3],
                        [2, 6, 5],
                        [3, 4, 1],
                        [3, 7, 4],
                        [4, 8, 5],
                        [4, 9, 2],
                        [5, 6, 3],
                        [5, 11, 4],
                        [6, 7, 1],
                        [7, 8, 2],
                        [8, 9, 3],
                        [9, 10, 4],
                        [10, 11, 5]],
 (5, ('R', 'L', 'R')): [[0, 1, 1],
                        [0, 5, 2],
                        [0, 11, 3],
                        [1, 2, 2],
                        [1, 10, 3],
                        [2, 3, 3],
                        [2, 6, 5],
                        [3, 4, 4],
                        [3, 9, 1],
                        [4, 7, 2],
                        [4, 8, 5],
                        [5, 6, 3],
                        [5, 11, 4],
                        [6, 7, 1],
                        [7, 8, 3],
                        [8, 9, 2],
                        [9, 10, 4],
                        [10, 11, 5]],
 (5, ('R', 'R', 'L')): [[0, 1, 1],
                        [0, 5, 2],
                        [0, 11, 3],
                        [1, 2, 2],
                        [1, 10, 3],
                        [2, 3, 5],
                        [2, 9, 3],
                        [3, 4, 2],
                        [3, 6, 1],
                        [4, 7, 3],
                        [4, 8, 4],
                        [5, 6, 3],
                        [5, 11, 4],
                        [6, 7, 5],
                        [7, 8, 2],
                        [8, 9, 1],
                        [9, 10, 4],
                        [10, 11, 5]],
 (5, ('R', 'R', 'R')): [[0, 1, 1],
                        [0, 5, 2],
                        [0, 11, 3],
                        [1, 2, 2],
                        [1, 10, 3],
                        [2, 3, 5],
                        [2, 9, 3],
                        [3, 4, 2],
                        [3, 8, 3],
                        [4, 6, 1],
                        [4, 7, 3],
                        [5, 6, 3],
                        [5, 11, 4],
                        [6, 7, 5],
                        [7, 8, 4],
                        [8, 9, 1],
                        [9, 10, 4],
                        [10, 11, 5]]}

# subcase 2.3.2.2 context key -> normalized extension template
EXTENSION_TEMPLATES: dict = {(4, 1, 2, 2, 1, 3, 4, 4, 3, 4, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 5,
                                                'uv': 2,
                                                'vy1': 4,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (4, 1, 2, 2, 1, 4, 2, 4, 3, 4, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 5,
                                                'uv': 2,
                                                'vy1': 4,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (4, 1, 2, 2, 1, 4, 3, 4, 3, 4, 2, ('xy2',)): ({'u1u2': 2,
                                                'u2y1': 1,
                                                'uu1': 5,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 3,
                                                'x1u1': 3,
                                                'y1y2': 2},
                                               {}),
 (4, 1, 2, 2, 1, 5, 3, 4, 3, 4, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 5,
                                                'uv': 2,
                                                'vy1': 4,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (4, 1, 2, 2, 1, 5, 4, 4, 3, 4, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 5,
                                                'uv': 2,
                                                'vy1': 4,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (4, 1, 2, 2, 4, 1, 3, 4, 3, 4, 2, ('xy2',)): ({'u1u2': 2,
                                                'u2y1': 1,
                                                'uu1': 5,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 3,
                                                'x1u1': 3,
                                                'y1y2': 2},
                                               {}),
 (4, 1, 2, 3, 1, 2, 4, 5, 5, 2, 2, ('xx2', 'yy2')): ({'u1u2': 1,
                                                      'u2y1': 5,
                                                      'uu1': 3,
                                                      'uu2': 4,
                                                      'uv': 2,
                                                      'vy1': 4,
                                                      'x1u1': 2,
                                                      'y1y2': 3},
                                                     {}),
 (4, 2, 1, 1, 3, 4, 2, 4, 3, 2, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 5,
                                                'uv': 2,
                                                'vy1': 4,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (4, 2, 1, 1, 4, 2, 3, 4, 3, 4, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 5,
                                                'uv': 2,
                                                'vy1': 4,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (4, 2, 1, 1, 4, 3, 2, 4, 3, 4, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 5,
                                                'uv': 2,
                                                'vy1': 4,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (4, 2, 1, 2, 1, 2, 3, 4, 3, 4, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 5,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 3,
                                                'x1u1': 3,
                                                'y1y2': 1},
                                               {}),
 (4, 2, 1, 2, 1, 4, 3, 4, 3, 1, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 5,
                                                'uv': 2,
                                                'vy1': 4,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (4, 2, 1, 3, 1, 3, 2, 5, 5, 1, 2, ('xx2', 'yy2')): ({'u1u2': 1,
                                                      'u2y1': 5,
                                                      'uu1': 3,
                                                      'uu2': 4,
                                                      'uv': 2,
                                                      'vy1': 4,
                                                      'x1u1': 2,
                                                      'y1y2': 3},
                                                     {}),
 (4, 2, 3, 2, 1, 4, 3, 4, 3, 1, 2, ('xy2',)): ({'u1u2': 2,
                                                'u2y1': 1,
                                                'uu1': 5,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 3,
                                                'x1u1': 3,
                                                'y1y2': 2},
                                               {}),
 (4, 3, 1, 2, 1, 4, 3, 4, 3, 1, 2, ('xy2',)): ({'u1u2': 2,
                                                'u2y1': 1,
                                                'uu1': 5,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 3,
                                                'x1u1': 3,
                                                'y1y2': 2},
                                               {}),
 (4, 3, 2, 2, 1, 3, 4, 4, 3, 1, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 5,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 3,
                                                'x1u1': 3,
                                                'y1y2': 1},
                                               {}),
 (4, 5, 1, 2, 1, 4, 3, 4, 3, 1, 2, ('xy2',)): ({'u1u2': 2,
                                                'u2y1': 1,
                                                'uu1': 5,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 3,
                                                'x1u1': 3,
                                                'y1y2': 2},
                                               {}),
 (4, 5, 2, 1, 3, 2, 4, 4, 3, 4, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 5,
                                                'uv': 2,
                                                'vy1': 4,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (4, 5, 2, 2, 1, 4, 3, 4, 3, 1, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 5,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 3,
                                                'x1u1': 3,
                                                'y1y2': 1},
                                               {}),
 (5, 1, 2, 2, 1, 2, 5, 5, 3, 5, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 5,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (5, 1, 2, 2, 1, 3, 2, 5, 3, 5, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 5,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (5, 1, 2, 2, 1, 3, 5, 5, 3, 5, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 5,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (5, 1, 2, 2, 1, 5, 3, 5, 3, 1, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 5,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (5, 1, 2, 2, 1, 5, 3, 5, 3, 5, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 5,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (5, 1, 2, 2, 5, 1, 3, 5, 3, 5, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 5,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (5, 1, 3, 2, 1, 5, 3, 5, 3, 1, 2, ('xy2',)): ({'u1u2': 2,
                                                'u2y1': 1,
                                                'uu1': 5,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 3,
                                                'x1u1': 3,
                                                'y1y2': 2},
                                               {}),
 (5, 2, 1, 1, 5, 2, 3, 5, 3, 5, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 5,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (5, 2, 1, 1, 5, 3, 2, 5, 3, 5, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 5,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (5, 2, 1, 2, 1, 2, 3, 5, 3, 5, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 5,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (5, 2, 1, 2, 1, 5, 3, 5, 3, 1, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 5,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {}),
 (5, 3, 2, 2, 1, 3, 5, 5, 3, 1, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 5,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 3,
                                                'x1u1': 3,
                                                'y1y2': 1},
                                               {}),
 (5, 4, 2, 2, 1, 5, 3, 5, 3, 1, 2, ('xy2',)): ({'u1u2': 1,
                                                'u2y1': 2,
                                                'uu1': 3,
                                                'uu2': 4,
                                                'uv': 2,
                                                'vy1': 5,
                                                'x1u1': 2,
                                                'y1y2': 3},
                                               {})}
