#pragma once

#include <gtest/gtest.h>

#include "mmagg/error.hpp"

#define EXPECT_CODE(stmt, expected)                                   \
    do {                                                              \
        try {                                                         \
            stmt;                                                     \
            ADD_FAILURE() << "no error from " #stmt;                  \
        } catch (const mmagg::Error& e) {                             \
            EXPECT_EQ(e.code(), expected) << e.what();                \
        }                                                             \
    } while (0)
