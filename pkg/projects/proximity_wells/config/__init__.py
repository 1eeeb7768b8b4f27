# Proximity Wells Configuration
