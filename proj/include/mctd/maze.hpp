#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mctd/types.hpp"

namespace mctd {

class MazeParseError : public std::runtime_error {
public:
    MazeParseError(std::string message, int line, int column)
        : std::runtime_error("maze parse error at line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Occupancy grid with a start and a goal. Cell (cx, cy) is addressed
// column-major in x, row-major in y; row 0 is the first text line.
struct GridMaze {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> occupancy;  // 1 = wall, row-major
    State start;
    State goal;

    bool in_bounds(int cx, int cy) const {
        return cx >= 0 && cx < width && cy >= 0 && cy < height;
    }

    bool blocked_cell(int cx, int cy) const {
        if (!in_bounds(cx, cy)) return true;
        return occupancy[static_cast<std::size_t>(cy) * width + cx] != 0;
    }

    // Occupancy test by flooring; anything outside the grid counts blocked.
    bool blocked_at(const State& s) const {
        return blocked_cell(static_cast<int>(std::floor(s.x)),
                            static_cast<int>(std::floor(s.y)));
    }

    static State cell_center(int cx, int cy) {
        return State{cx + 0.5, cy + 0.5};
    }

    // Center of the free cell closest to `s` (Euclidean, ties by row-major
    // cell index). The maze always has free cells, so this total.
    State nearest_free_center(const State& s) const;

    std::string to_text() const;
};

GridMaze load_maze(const std::string& text);
GridMaze load_maze_file(const std::string& path);

struct PlanningProblem {
    GridMaze maze;
    int horizon = 500;              // max trajectory steps
    double goal_tolerance = 0.5;    // cell units
    double max_step_length = 1.0;   // cell units

    bool goal_reached(const State& s) const {
        return distance(s, maze.goal) <= goal_tolerance;
    }
};

}  // namespace mctd
