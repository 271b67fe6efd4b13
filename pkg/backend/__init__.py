# Backend services for wtcensus
