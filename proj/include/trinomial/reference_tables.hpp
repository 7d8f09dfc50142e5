#pragma once

#include <array>
#include <string_view>
#include <vector>

namespace trinomial::reference {

/// A printed 10x10 transform triangle: rows[n] lists a(n,k) for k = n..9,
/// followed by the column sums s(0..9) and alternating sums s-bar(0..9).
struct PublishedTriangle {
  std::string_view source;
  std::vector<std::vector<long long>> rows;
  std::vector<long long> sums;
  std::vector<long long> alt_sums;
};

inline const std::vector<PublishedTriangle>& published_triangles() {
  static const std::vector<PublishedTriangle> tables{
      PublishedTriangle{
          "fibonacci",
          {
              {0, 1, 1, 2, 3, 5, 8, 13, 21, 34},
          {2, 4, 6, 10, 16, 26, 42, 68, 110},
          {12, 20, 32, 52, 84, 136, 220, 356},
          {64, 104, 168, 272, 440, 712, 1152},
          {336, 544, 880, 1424, 2304, 3728},
          {1760, 2848, 4608, 7456, 12064},
          {9216, 14912, 24128, 39040},
          {48256, 78080, 126336},
          {252672, 408832},
          {1323008},
          },
          {0, 3, 17, 92, 485, 2545, 13334, 69831, 365661, 1914660},
          {0, -1, 9, -48, 257, -1343, 7042, -36861, 193029, -1010680},
      },
      PublishedTriangle{
          "tribonacci",
          {
              {0, 0, 1, 1, 2, 4, 7, 13, 24, 44},
          {1, 2, 4, 7, 13, 24, 44, 81, 149},
          {7, 13, 24, 44, 81, 149, 274, 504},
          {44, 81, 149, 274, 504, 927, 1705},
          {274, 504, 927, 1705, 3136, 5768},
          {1705, 3136, 5768, 10609, 19513},
          {10609, 19513, 35890, 66012},
          {66012, 121415, 223317},
          {410744, 755476},
          {2555757},
          },
          {0, 1, 10, 62, 388, 2419, 15058, 93708, 583100, 3628245},
          {0, -1, 6, -34, 212, -1315, 8190, -50948, 317036, -1972637},
      },
      PublishedTriangle{
          "ones",
          {
              {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
          {3, 3, 3, 3, 3, 3, 3, 3, 3},
          {9, 9, 9, 9, 9, 9, 9, 9},
          {27, 27, 27, 27, 27, 27, 27},
          {81, 81, 81, 81, 81, 81},
          {243, 243, 243, 243, 243},
          {729, 729, 729, 729},
          {2187, 2187, 2187},
          {6561, 6561},
          {19683},
          },
          {1, 4, 13, 40, 121, 364, 1093, 3280, 9841, 29524},
          {1, -2, 7, -20, 61, -182, 547, -1640, 4921, -14762},
      },
      PublishedTriangle{
          "naturals",
          {
              {0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
          {3, 6, 9, 12, 15, 18, 21, 24, 27},
          {18, 27, 36, 45, 54, 63, 72, 81},
          {81, 108, 135, 162, 189, 216, 243},
          {324, 405, 486, 567, 648, 729},
          {1215, 1458, 1701, 1944, 2187},
          {4374, 5103, 5832, 6561},
          {15309, 17496, 19683},
          {52488, 59049},
          {177147},
          },
          {0, 4, 26, 120, 484, 1820, 6558, 22960, 78728, 265716},
          {0, -2, 14, -60, 244, -910, 3282, -11480, 39368, -132858},
      },
  };
  return tables;
}

/// Rows 0..6 of the trinomial triangle T(n,k), k = 0..2n.
inline const std::vector<std::vector<long long>>& trinomial_rows() {
  static const std::vector<std::vector<long long>> rows{
      {1},
      {1, 1, 1},
      {1, 2, 3, 2, 1},
      {1, 3, 6, 7, 6, 3, 1},
      {1, 4, 10, 16, 19, 16, 10, 4, 1},
      {1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1},
      {1, 6, 21, 50, 90, 126, 141, 126, 90, 50, 21, 6, 1},
  };
  return rows;
}

/// Rows 0..6 of the partial-sum triangle S(n,k), k = 0..2n.
inline const std::vector<std::vector<long long>>& partial_sum_rows() {
  static const std::vector<std::vector<long long>> rows{
      {1},
      {1, 2, 1},
      {1, 3, 5, 3, 1},
      {1, 4, 9, 12, 9, 4, 1},
      {1, 5, 14, 25, 31, 25, 14, 5, 1},
      {1, 6, 20, 44, 70, 82, 70, 44, 20, 6, 1},
      {1, 7, 27, 70, 134, 196, 223, 196, 134, 70, 27, 7, 1},
  };
  return rows;
}

}  // namespace trinomial::reference
