# symspace: multiplicities for finite symmetric spaces
