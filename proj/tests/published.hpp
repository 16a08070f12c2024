#pragma once

#include <array>
#include <string_view>
#include <utility>

namespace jrobust::testdata {

// Published Pass@10 pairs and change column, one row per (kind, model).
struct PublishedRow {
  std::string_view kind;
  std::string_view model;
  double orig;
  double trans;
  double change;
  char arrow;  // 'u' up, 'd' down, '0' unchanged
};

inline constexpr std::array<PublishedRow, 40> kPublishedPass10 = {{
    {"LocalVarRename", "plbart_base", 14.53, 6.54, 54.99, 'd'},
    {"LocalVarRename", "plbart_large", 21.88, 9.91, 54.71, 'd'},
    {"LocalVarRename", "codet5_small", 19.35, 8.26, 57.31, 'd'},
    {"LocalVarRename", "codet5_base", 24.81, 12.28, 50.5, 'd'},
    {"LocalVarRename", "codet5_large", 23.66, 11.5, 51.39, 'd'},
    {"MethodRename", "plbart_base", 19.46, 18.13, 6.83, 'd'},
    {"MethodRename", "plbart_large", 23.98, 22.8, 4.92, 'd'},
    {"MethodRename", "codet5_small", 21.16, 19.46, 8.03, 'd'},
    {"MethodRename", "codet5_base", 25.87, 24.37, 5.8, 'd'},
    {"MethodRename", "codet5_large", 24.75, 23.98, 3.11, 'd'},
    {"ParamRename", "plbart_base", 17.86, 18.69, 4.65, 'u'},
    {"ParamRename", "plbart_large", 22.6, 23.33, 3.23, 'u'},
    {"ParamRename", "codet5_small", 20.3, 19.1, 5.91, 'd'},
    {"ParamRename", "codet5_base", 24.77, 24.41, 1.45, 'd'},
    {"ParamRename", "codet5_large", 24.41, 23.7, 2.91, 'd'},
    {"BooleanExchange", "plbart_base", 12.5, 22.22, 77.76, 'u'},
    {"BooleanExchange", "plbart_large", 22.22, 30.0, 35.01, 'u'},
    {"BooleanExchange", "codet5_small", 22.22, 22.22, 0.0, '0'},
    {"BooleanExchange", "codet5_base", 22.22, 12.5, 43.74, 'd'},
    {"BooleanExchange", "codet5_large", 12.5, 12.5, 0.0, '0'},
    {"LoopExchange", "plbart_base", 19.32, 18.39, 4.81, 'd'},
    {"LoopExchange", "plbart_large", 25.26, 23.66, 6.33, 'd'},
    {"LoopExchange", "codet5_small", 21.55, 17.92, 16.84, 'd'},
    {"LoopExchange", "codet5_base", 26.04, 23.66, 9.14, 'd'},
    {"LoopExchange", "codet5_large", 28.28, 26.8, 5.23, 'd'},
    {"ReorderCondition", "plbart_base", 16.88, 15.69, 7.05, 'd'},
    {"ReorderCondition", "plbart_large", 21.41, 18.48, 13.69, 'd'},
    {"ReorderCondition", "codet5_small", 19.7, 17.92, 9.04, 'd'},
    {"ReorderCondition", "codet5_base", 23.25, 20.99, 9.72, 'd'},
    {"ReorderCondition", "codet5_large", 23.45, 21.62, 7.8, 'd'},
    {"InsertLog", "plbart_base", 17.22, 16.43, 4.59, 'd'},
    {"InsertLog", "plbart_large", 22.07, 22.42, 1.59, 'u'},
    {"InsertLog", "codet5_small", 19.53, 18.4, 5.79, 'd'},
    {"InsertLog", "codet5_base", 24.45, 22.07, 9.73, 'd'},
    {"InsertLog", "codet5_large", 24.78, 24.45, 1.33, 'd'},
    {"InsertTryCatch", "plbart_base", 16.91, 13.74, 18.75, 'd'},
    {"InsertTryCatch", "plbart_large", 21.53, 19.29, 10.4, 'd'},
    {"InsertTryCatch", "codet5_small", 19.29, 11.02, 42.87, 'd'},
    {"InsertTryCatch", "codet5_base", 25.17, 18.12, 28.01, 'd'},
    {"InsertTryCatch", "codet5_large", 26.14, 18.12, 30.68, 'd'},
}};

// Instance counts from the subtable captions, in TransformKind order.
inline constexpr std::array<std::pair<std::string_view, int>, 8> kPublishedCounts = {{
    {"LocalVarRename", 100},
    {"MethodRename", 149},
    {"ParamRename", 162},
    {"BooleanExchange", 7},
    {"LoopExchange", 142},
    {"ReorderCondition", 603},
    {"InsertLog", 173},
    {"InsertTryCatch", 114},
}};

}  // namespace jrobust::testdata
