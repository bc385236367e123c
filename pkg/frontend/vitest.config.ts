import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    // The contract suite boots a real service process.
    testTimeout: 120_000,
    hookTimeout: 120_000,
  },
});
