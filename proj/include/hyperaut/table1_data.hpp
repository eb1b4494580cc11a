/*
   Copyright 2026 The hyperaut Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   Registry of full automorphism groups of hyperelliptic curves, one record per
   (group, signature) row.

   delta = (a*g + b) / den + offset, den is an integer or "n".
   markers: the non-generic signature entries as [cycle length, count], written in n.
   involutions: i(G) as a formula in n; "merged" marks a value shared by the rows
   of one group block where the source table prints it once.
*/

#ifndef HYPERAUT_TABLE1_DATA_HPP
#define HYPERAUT_TABLE1_DATA_HPP

namespace hyperaut::data {

inline constexpr const char* table1_json = R"json({
  "version": "1.0.0",
  "rows": [
    {"index": 1, "group": "Z2xZn", "reduced": "Zn", "delta": {"a": 2, "b": 2, "den": "n", "offset": "-1"},
     "constraints": ["n<g+1"], "signature": "(n^2, n^2, 2^n, ..., 2^n)",
     "markers": [["n", "2"], ["n", "2"]], "phi": "(n, n)", "involutions": "3", "involutions_cell": "own"},
    {"index": 2, "group": "Z2n", "reduced": "Zn", "delta": {"a": 2, "b": 1, "den": "n", "offset": "-1"},
     "constraints": [], "signature": "(n^2, 2n, 2^n, ..., 2^n)",
     "markers": [["n", "2"], ["2n", "1"]], "phi": "(n, n)", "involutions": "1", "involutions_cell": "own"},
    {"index": 3, "group": "Z2n", "reduced": "Zn", "delta": {"a": 2, "b": 0, "den": "n", "offset": "-1"},
     "constraints": ["n<g"], "signature": "(2n, 2n, 2^n, ..., 2^n)",
     "markers": [["2n", "1"], ["2n", "1"]], "phi": "(n, n)", "involutions": "1", "involutions_cell": "own"},
    {"index": 4, "group": "Z2xDn", "reduced": "Dn", "delta": {"a": 1, "b": 1, "den": "n", "offset": "0"},
     "constraints": [], "signature": "(n^4, 2^{2n}, ..., 2^{2n})",
     "markers": [["n", "4"]], "phi": "(2^n, 2^n, n^2)", "involutions": "2n+3", "involutions_cell": "own"},
    {"index": 5, "group": "Vn", "reduced": "Dn", "delta": {"a": 1, "b": 1, "den": "n", "offset": "-1/2"},
     "constraints": ["n even"], "signature": "(n^4, 4^n, 2^{2n}, ..., 2^{2n})",
     "markers": [["n", "4"], ["4", "n"]], "phi": "(2^n, 2^n, n^2)", "involutions": "n+3", "involutions_cell": "own"},
    {"index": 6, "group": "D2n", "reduced": "Dn", "delta": {"a": 1, "b": 0, "den": "n", "offset": "0"},
     "constraints": ["n even"], "signature": "((2n)^2, 2^{2n}, ..., 2^{2n})",
     "markers": [["2n", "2"]], "phi": "(2^n, 2^n, n^2)", "involutions": "n+1", "involutions_cell": "own"},
    {"index": 7, "group": "Hn", "reduced": "Dn", "delta": {"a": 1, "b": 1, "den": "n", "offset": "-1"},
     "constraints": ["n<g+1", "n even"], "signature": "(4^n, 4^n, n^4, 2^{2n}, ..., 2^{2n})",
     "markers": [["4", "n"], ["4", "n"], ["n", "4"]], "phi": "(2^n, 2^n, n^2)", "involutions": "3", "involutions_cell": "own"},
    {"index": 8, "group": "Un", "reduced": "Dn", "delta": {"a": 1, "b": 0, "den": "n", "offset": "-1/2"},
     "constraints": ["g!=2", "n even"], "signature": "(4^n, (2n)^2, 2^{2n}, ..., 2^{2n})",
     "markers": [["4", "n"], ["2n", "2"]], "phi": "(2^n, 2^n, n^2)", "involutions": "n+1", "involutions_cell": "own"},
    {"index": 9, "group": "Gn", "reduced": "Dn", "delta": {"a": 1, "b": 0, "den": "n", "offset": "-1"},
     "constraints": ["n<g", "n even"], "signature": "(4^n, 4^n, (2n)^2, 2^{2n}, ..., 2^{2n})",
     "markers": [["4", "n"], ["4", "n"], ["2n", "2"]], "phi": "(2^n, 2^n, n^2)", "involutions": "1", "involutions_cell": "own"},

    {"index": 10, "group": "Z2xA4", "reduced": "A4", "delta": {"a": 1, "b": 1, "den": 6, "offset": "0"},
     "constraints": [], "signature": "(3^8, 3^8, 2^12, ..., 2^12)",
     "markers": [["3", "8"], ["3", "8"]], "phi": "(2^6, 3^4, 3^4)", "involutions": "7", "involutions_cell": "merged"},
    {"index": 11, "group": "Z2xA4", "reduced": "A4", "delta": {"a": 1, "b": -1, "den": 6, "offset": "0"},
     "constraints": [], "signature": "(3^8, 6^4, 2^12, ..., 2^12)",
     "markers": [["3", "8"], ["6", "4"]], "phi": "(2^6, 3^4, 3^4)", "involutions": "7", "involutions_cell": "own"},
    {"index": 12, "group": "Z2xA4", "reduced": "A4", "delta": {"a": 1, "b": -3, "den": 6, "offset": "0"},
     "constraints": ["delta!=0"], "signature": "(6^4, 6^4, 2^12, ..., 2^12)",
     "markers": [["6", "4"], ["6", "4"]], "phi": "(2^6, 3^4, 3^4)", "involutions": "7", "involutions_cell": "merged"},
    {"index": 13, "group": "SL2(3)", "reduced": "A4", "delta": {"a": 1, "b": -2, "den": 6, "offset": "0"},
     "constraints": ["delta!=0"], "signature": "(4^6, 3^8, 3^8, 2^12, ..., 2^12)",
     "markers": [["4", "6"], ["3", "8"], ["3", "8"]], "phi": "(2^6, 3^4, 3^4)", "involutions": "1", "involutions_cell": "merged"},
    {"index": 14, "group": "SL2(3)", "reduced": "A4", "delta": {"a": 1, "b": -4, "den": 6, "offset": "0"},
     "constraints": [], "signature": "(4^6, 3^8, 6^4, 2^12, ..., 2^12)",
     "markers": [["4", "6"], ["3", "8"], ["6", "4"]], "phi": "(2^6, 3^4, 3^4)", "involutions": "1", "involutions_cell": "own"},
    {"index": 15, "group": "SL2(3)", "reduced": "A4", "delta": {"a": 1, "b": -6, "den": 6, "offset": "0"},
     "constraints": ["delta!=0"], "signature": "(4^6, 6^4, 6^4, 2^12, ..., 2^12)",
     "markers": [["4", "6"], ["6", "4"], ["6", "4"]], "phi": "(2^6, 3^4, 3^4)", "involutions": "1", "involutions_cell": "merged"},

    {"index": 16, "group": "Z2xS4", "reduced": "S4", "delta": {"a": 1, "b": 1, "den": 12, "offset": "0"},
     "constraints": [], "signature": "(3^16, 4^12, 2^24, ..., 2^24)",
     "markers": [["3", "16"], ["4", "12"]], "phi": "(2^12, 3^8, 4^6)", "involutions": "19", "involutions_cell": "merged"},
    {"index": 17, "group": "Z2xS4", "reduced": "S4", "delta": {"a": 1, "b": -3, "den": 12, "offset": "0"},
     "constraints": [], "signature": "(6^8, 4^12, 2^24, ..., 2^24)",
     "markers": [["6", "8"], ["4", "12"]], "phi": "(2^12, 3^8, 4^6)", "involutions": "19", "involutions_cell": "own"},
    {"index": 18, "group": "GL2(3)", "reduced": "S4", "delta": {"a": 1, "b": -2, "den": 12, "offset": "0"},
     "constraints": [], "signature": "(3^16, 8^6, 2^24, ..., 2^24)",
     "markers": [["3", "16"], ["8", "6"]], "phi": "(2^12, 3^8, 4^6)", "involutions": "13", "involutions_cell": "merged"},
    {"index": 19, "group": "GL2(3)", "reduced": "S4", "delta": {"a": 1, "b": -6, "den": 12, "offset": "0"},
     "constraints": [], "signature": "(6^8, 8^6, 2^24, ..., 2^24)",
     "markers": [["6", "8"], ["8", "6"]], "phi": "(2^12, 3^8, 4^6)", "involutions": "13", "involutions_cell": "own"},
    {"index": 20, "group": "W2", "reduced": "S4", "delta": {"a": 1, "b": -5, "den": 12, "offset": "0"},
     "constraints": [], "signature": "(4^12, 4^12, 3^16, 2^24, ..., 2^24)",
     "markers": [["4", "12"], ["4", "12"], ["3", "16"]], "phi": "(2^12, 3^8, 4^6)", "involutions": "7", "involutions_cell": "own"},
    {"index": 21, "group": "W2", "reduced": "S4", "delta": {"a": 1, "b": -9, "den": 12, "offset": "0"},
     "constraints": [], "signature": "(4^12, 4^12, 6^8, 2^24, ..., 2^24)",
     "markers": [["4", "12"], ["4", "12"], ["6", "8"]], "phi": "(2^12, 3^8, 4^6)", "involutions": "7", "involutions_cell": "merged"},
    {"index": 22, "group": "W3", "reduced": "S4", "delta": {"a": 1, "b": -8, "den": 12, "offset": "0"},
     "constraints": [], "signature": "(4^12, 3^16, 8^6, 2^24, ..., 2^24)",
     "markers": [["4", "12"], ["3", "16"], ["8", "6"]], "phi": "(2^12, 3^8, 4^6)", "involutions": "1", "involutions_cell": "own"},
    {"index": 23, "group": "W3", "reduced": "S4", "delta": {"a": 1, "b": -12, "den": 12, "offset": "0"},
     "constraints": [], "signature": "(4^12, 6^8, 8^6, 2^24, ..., 2^24)",
     "markers": [["4", "12"], ["6", "8"], ["8", "6"]], "phi": "(2^12, 3^8, 4^6)", "involutions": "1", "involutions_cell": "merged"},

    {"index": 24, "group": "Z2xA5", "reduced": "A5", "delta": {"a": 1, "b": 1, "den": 30, "offset": "0"},
     "constraints": [], "signature": "(3^40, 5^24, 2^60, ..., 2^60)",
     "markers": [["3", "40"], ["5", "24"]], "phi": "(2^30, 3^20, 5^12)", "involutions": "31", "involutions_cell": "merged"},
    {"index": 25, "group": "Z2xA5", "reduced": "A5", "delta": {"a": 1, "b": -5, "den": 30, "offset": "0"},
     "constraints": [], "signature": "(3^40, 10^12, 2^60, ..., 2^60)",
     "markers": [["3", "40"], ["10", "12"]], "phi": "(2^30, 3^20, 5^12)", "involutions": "31", "involutions_cell": "own"},
    {"index": 26, "group": "Z2xA5", "reduced": "A5", "delta": {"a": 1, "b": -15, "den": 30, "offset": "0"},
     "constraints": [], "signature": "(6^20, 10^12, 2^60, ..., 2^60)",
     "markers": [["6", "20"], ["10", "12"]], "phi": "(2^30, 3^20, 5^12)", "involutions": "31", "involutions_cell": "merged"},
    {"index": 27, "group": "Z2xA5", "reduced": "A5", "delta": {"a": 1, "b": -9, "den": 30, "offset": "0"},
     "constraints": [], "signature": "(6^20, 5^24, 2^60, ..., 2^60)",
     "markers": [["6", "20"], ["5", "24"]], "phi": "(2^30, 3^20, 5^12)", "involutions": "31", "involutions_cell": "merged"},
    {"index": 28, "group": "SL2(5)", "reduced": "A5", "delta": {"a": 1, "b": -14, "den": 30, "offset": "0"},
     "constraints": [], "signature": "(4^30, 3^40, 5^24, 2^60, ..., 2^60)",
     "markers": [["4", "30"], ["3", "40"], ["5", "24"]], "phi": "(2^30, 3^20, 5^12)", "involutions": "1", "involutions_cell": "merged"},
    {"index": 29, "group": "SL2(5)", "reduced": "A5", "delta": {"a": 1, "b": -20, "den": 30, "offset": "0"},
     "constraints": [], "signature": "(4^30, 3^40, 10^12, 2^60, ..., 2^60)",
     "markers": [["4", "30"], ["3", "40"], ["10", "12"]], "phi": "(2^30, 3^20, 5^12)", "involutions": "1", "involutions_cell": "own"},
    {"index": 30, "group": "SL2(5)", "reduced": "A5", "delta": {"a": 1, "b": -24, "den": 30, "offset": "0"},
     "constraints": [], "signature": "(4^30, 6^20, 5^24, 2^60, ..., 2^60)",
     "markers": [["4", "30"], ["6", "20"], ["5", "24"]], "phi": "(2^30, 3^20, 5^12)", "involutions": "1", "involutions_cell": "merged"},
    {"index": 31, "group": "SL2(5)", "reduced": "A5", "delta": {"a": 1, "b": -30, "den": 30, "offset": "0"},
     "constraints": [], "signature": "(4^30, 6^20, 10^12, 2^60, ..., 2^60)",
     "markers": [["4", "30"], ["6", "20"], ["10", "12"]], "phi": "(2^30, 3^20, 5^12)", "involutions": "1", "involutions_cell": "merged"}
  ],
  "exclusions": [
    {"group": "H1", "note": "H1 is cyclic of order 4 and is covered by the cyclic rows"},
    {"group": "G1", "note": "G1 is cyclic of order 4 and is covered by the cyclic rows"},
    {"reduced": "D3", "genus": 3, "note": "reduced group D3 does not occur for genus 3"}
  ],
  "family_polynomials": {
    "A4": {
      "G": "X^12 - l X^10 - 33 X^8 + 2 l X^6 - 33 X^4 - l X^2 + 1",
      "condition": "l^2 + 108 != 0",
      "prefixes": ["1", "X^4 + 2 sqrt(-3) X^2 + 1", "X^8 + 14 X^4 + 1", "X (X^4 - 1)",
                   "X (X^4 - 1)(X^4 + 2 sqrt(-3) X^2 + 1)", "X (X^4 - 1)(X^8 + 14 X^4 + 1)"]
    },
    "S4": {
      "G": "X^24 + l X^20 + (759 - 4 l) X^16 + 2 (3 l + 1288) X^12 + (759 - 4 l) X^8 + l X^4 + 1",
      "R": "X^12 - 33 X^8 - 33 X^4 + 1",
      "S": "X^8 + 14 X^4 + 1",
      "T": "X^4 - 1",
      "T_reading": "X (X^4 - 1): the six octahedron vertices 0, inf, +-1, +-i; X^4 - 1 alone has the wrong degree for every row",
      "prefixes": ["1", "S", "T", "S T", "R", "R S", "R T", "R S T"]
    },
    "A5": {
      "R_verbatim": "X^30 + 522 X^25 - 10005 X^20 - 10005 X^15 - 522 X^5 + 1",
      "R": "X^30 + 522 X^25 - 10005 X^20 - 10005 X^10 - 522 X^5 + 1",
      "S": "X^20 - 228 X^15 + 494 X^10 + 228 X^5 + 1",
      "T_verbatim": "X^10 + 10 X - 1",
      "T": "X (X^10 + 11 X^5 - 1)",
      "note": "T_verbatim is inhomogeneous in X^5 and fails both the A5 vanishing test and the order-60 symmetry test; the corrected T and R pass both",
      "prefixes_by_row": {"24": "1", "25": "T", "26": "S T", "27": "S", "28": "R", "29": "R T", "30": "R S", "31": "R S T"}
    }
  }
})json";

}  // namespace hyperaut::data

#endif
