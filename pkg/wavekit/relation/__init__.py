from .bernoulli import bernoulli_residual_irrotational, bernoulli_residual_multivalued, bernoulli_residual_rotational
from .residuals import flat_bottom_residual, irrotational_residuals, multivalued_residual, rotational_residual
