"""Distance mean-regular graphs package."""
