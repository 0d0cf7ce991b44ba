import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    // The integration suite drives a live service process through hundreds
    // of solves, so the ceiling is generous.
    testTimeout: 180_000,
    hookTimeout: 60_000,
  },
});
