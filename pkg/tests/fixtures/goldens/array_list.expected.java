static int f_gold ( List < Integer > arr , int n ) {
    HashMap < Integer , Integer > hmap = new HashMap < > ( ) ;
    for ( int i = 0 ; i < n ; i ++ ) {
        if ( hmap . containsKey ( arr . get ( i ) ) ) {
            int val = hmap . get ( arr . get ( i ) ) ;
            hmap . put ( arr . get ( i ) , val + 1 ) ;
        } else {
            hmap . put ( arr . get ( i ) , 1 ) ;
        }
    }
    for ( Integer a : hmap . keySet ( ) ) {
        if ( hmap . get ( a ) % 2 != 0 ) {
            return a ;
        }
    }
    return - 1 ;
}
