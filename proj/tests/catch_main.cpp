// Catch2 v3 amalgamated translation unit (provides main)
#include <catch2/catch_amalgamated.cpp>
